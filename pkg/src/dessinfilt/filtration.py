"""
Optional-edge expansions, the dessin filtration, the product of Belyi
covers and the product filtration, compared inside a truncation window.

All spans are built from generators whose support lies in the window, so
both filtrations are inner approximations of their intersections with the
span of dessins with at most ``N`` edges.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .dessin import (
    Dessin,
    DessinError,
    canonical_form,
    canonical_labeling,
    delete_edges,
    from_key,
    key_edges,
    key_order,
)
from .enumeration import BasisWindow
from .linalg import SparseVector, Subspace, not_contained, projection_rank, subspace_leq

EMPTY_KEY = "0:/"
ONE_EDGE_KEY = "1:0/0"
KINDS = ("dessin", "belyi")


class FiltrationError(RuntimeError):
    pass


#####################################################################
# Expansions and the dessin filtration
#####################################################################

def expansion(D: Dessin, S: Iterable[int]) -> SparseVector:
    """
    Alternating sum over subsets ``T`` of ``S`` of the classes of ``D`` minus ``T``.

        >>> double = Dessin((1, 0), (1, 0))
        >>> sorted(expansion(double, {0, 1}).items())
        [('0:/', Fraction(1, 1)), ('1:0/0', Fraction(-2, 1)), ('2:1,0/1,0', Fraction(1, 1))]
    """
    S = sorted(set(S))
    for e in S:
        if not isinstance(e, int) or not 0 <= e < D.edges:
            raise DessinError(f"optional edge {e!r} is not an edge of a dessin with {D.edges} edges")
    acc: dict[str, int] = {}
    for r in range(len(S) + 1):
        sign = -1 if r % 2 else 1
        for T in itertools.combinations(S, r):
            k = canonical_form(delete_edges(D, T)[0])[0]
            acc[k] = acc.get(k, 0) + sign
    return SparseVector(acc)


def _in_window(v: SparseVector, W: BasisWindow) -> bool:
    return all(k in W.index for k in v)


def _dessin_generators_for(key: str, d: int) -> list[tuple[tuple, SparseVector]]:
    D = from_key(key)
    out = []
    seen = set()
    for S in itertools.combinations(range(D.edges), d):
        marked = canonical_labeling(D, frozenset(S))[0]
        if marked in seen:
            continue
        seen.add(marked)
        out.append(((key, S), expansion(D, S)))
    return out


def _pool_map(fn, items, workers, *args):
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = max(1, len(items) // (4 * workers))
            return list(ex.map(fn, items, *(itertools.repeat(a) for a in args), chunksize=chunks))
    return [fn(x, *args) for x in items]


def dessin_level_generators(W: BasisWindow, d: int, workers: int = 1) -> list[tuple[tuple, SparseVector]]:
    """
    Expansions of every window class with every ``d``-element set of optional
    edges, deduplicated up to isomorphism of the marked pair and restricted to
    those supported in the window. Items are ``((key, S), vector)``.
    """
    if d < 0:
        raise ValueError("level must be non-negative")
    keys = [k for k in W.keys if key_edges(k) >= d]
    blocks = _pool_map(_dessin_generators_for, keys, workers, d)
    return [g for block in blocks for g in block if _in_window(g[1], W)]


def span(vectors: Iterable[SparseVector]) -> Subspace:
    S = Subspace()
    for v in vectors:
        S.insert(v)
    return S


def dessin_level_span(W: BasisWindow, d: int, workers: int = 1) -> Subspace:
    return span(v for _, v in dessin_level_generators(W, d, workers))


#####################################################################
# Products of covers and the product filtration
#####################################################################

def product(D1: Dessin, D2: Dessin) -> Dessin:
    """
    Fiber product over the diagonal: edges are pairs ``(i, j)`` (flattened
    to ``i*n2 + j``) on which both monodromy permutations act diagonally.
    The result is returned in canonical form.
    """
    n2 = D2.edges
    s0 = tuple(D1.sigma0[i] * n2 + D2.sigma0[j] for i in range(D1.edges) for j in range(n2))
    s1 = tuple(D1.sigma1[i] * n2 + D2.sigma1[j] for i in range(D1.edges) for j in range(n2))
    return canonical_form(Dessin(s0, s1))[1]


class _ProductTable:
    # memoized product on canonical keys

    def __init__(self):
        self._memo: dict[tuple[str, str], str] = {}

    def __call__(self, a: str, b: str) -> str:
        if a == EMPTY_KEY or b == EMPTY_KEY:
            return EMPTY_KEY
        if a == ONE_EDGE_KEY:
            return b
        if b == ONE_EDGE_KEY:
            return a
        if key_order(b) < key_order(a):
            a, b = b, a
        k = self._memo.get((a, b))
        if k is None:
            k = canonical_form(product(from_key(a), from_key(b)))[0]
            self._memo[a, b] = k
        return k


_products = _ProductTable()


def _product_vector_keys(factors: Sequence[tuple[str, str]]) -> SparseVector:
    acc: dict[str, int] = {}
    for choice in itertools.product((0, 1), repeat=len(factors)):
        k = ONE_EDGE_KEY
        for (a, b), c in zip(factors, choice):
            k = _products(k, b if c else a)
        acc[k] = acc.get(k, 0) + (-1 if sum(choice) % 2 else 1)
    return SparseVector(acc)


def product_vector(factors: Sequence[tuple[Dessin, Dessin]]) -> SparseVector:
    """Expanded product ``(A1 - B1) o ... o (An - Bn)``."""
    if not factors:
        raise ValueError("at least one factor is required")
    return _product_vector_keys([(canonical_form(A)[0], canonical_form(B)[0]) for A, B in factors])


def _factor_tuples(W: BasisWindow, n: int) -> Iterator[tuple[tuple[str, str], ...]]:
    # multisets of n unordered pairs {A, B}, A != B, with prod max(|A|, |B|) <= N
    pairs = []
    for i, a in enumerate(W.keys):
        for b in W.keys[i + 1:]:
            m = max(key_edges(a), key_edges(b))
            if m >= 1:
                pairs.append((m, a, b))
    pairs.sort(key=lambda t: t[0])
    N = W.max_edges

    def rec(start, remaining, bound, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for i in range(start, len(pairs)):
            m, a, b = pairs[i]
            if m > bound:
                break
            acc.append((a, b))
            yield from rec(i, remaining - 1, bound // m, acc)
            acc.pop()

    yield from rec(0, n, N, [])


def _belyi_generator(factors):
    return factors, _product_vector_keys(factors)


def belyi_level_generators(W: BasisWindow, n: int, workers: int = 1) -> list[tuple[tuple, SparseVector]]:
    """
    Product generators at level ``n`` with factors drawn from window classes.
    Level 0 is the whole window by convention.
    """
    if n < 0:
        raise ValueError("level must be non-negative")
    if n == 0:
        return [((k,), SparseVector.basis(k)) for k in W.keys]
    tuples = list(_factor_tuples(W, n))
    gens = _pool_map(_belyi_generator, tuples, workers)
    return [g for g in gens if not g[1].is_zero() and _in_window(g[1], W)]


def belyi_level_span_inner(W: BasisWindow, n: int, workers: int = 1) -> Subspace:
    return span(v for _, v in belyi_level_generators(W, n, workers))


def level_generators(W: BasisWindow, kind: str, level: int, workers: int = 1):
    if kind == "dessin":
        return dessin_level_generators(W, level, workers)
    if kind == "belyi":
        return belyi_level_generators(W, level, workers)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def level_span(W: BasisWindow, kind: str, level: int, workers: int = 1) -> Subspace:
    return span(v for _, v in level_generators(W, kind, level, workers))


#####################################################################
# Comparison
#####################################################################

@dataclass
class ComparisonReport:
    window: int
    level: int
    dim: int
    rank_dessin: int
    rank_belyi_inner: int
    belyi_in_dessin: bool
    dessin_in_belyi_inner: bool
    stable_at_prev_window: bool
    witnesses: list[SparseVector] = field(default_factory=list)
    generators_dessin: int = 0
    generators_belyi: int = 0
    include_empty: bool = True
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "window": self.window,
            "level": self.level,
            "dim": self.dim,
            "rank_dessin": self.rank_dessin,
            "rank_belyi_inner": self.rank_belyi_inner,
            "belyi_in_dessin": self.belyi_in_dessin,
            "dessin_in_belyi_inner": self.dessin_in_belyi_inner,
            "stable_at_prev_window": self.stable_at_prev_window,
            "witnesses": [w.to_json() for w in self.witnesses],
            "generators_dessin": self.generators_dessin,
            "generators_belyi": self.generators_belyi,
            "include_empty": self.include_empty,
        }
        if timings:
            out["timings"] = dict(self.timings)
        return out


def _stable(S: Subspace, W: BasisWindow, kind: str, level: int, workers: int) -> bool:
    # compare the span computed on the N-1 window with S intersected with that window
    if W.max_edges == 0:
        return True
    top = [k for k in W.keys if key_edges(k) == W.max_edges]
    restricted = S.rank - projection_rank(S, top)
    return level_span(W.restrict(W.max_edges - 1), kind, level, workers).rank == restricted


def compare_levels(W: BasisWindow, k: int, workers: int = 1, stability: bool = True,
                   max_witnesses: int = 5) -> ComparisonReport:
    if k < 1:
        raise ValueError("comparison level must be at least 1")
    t0 = time.perf_counter()
    dgens = dessin_level_generators(W, k, workers)
    VD = span(v for _, v in dgens)
    t1 = time.perf_counter()
    bgens = belyi_level_generators(W, k, workers)
    VB = span(v for _, v in bgens)
    t2 = time.perf_counter()
    b_in_d = subspace_leq(VB, VD)
    d_in_b = subspace_leq(VD, VB)
    witnesses = []
    if not b_in_d:
        witnesses += not_contained(VB, VD, max_witnesses)
    if not d_in_b:
        witnesses += not_contained(VD, VB, max_witnesses - len(witnesses))
    stable = True
    if stability:
        stable = _stable(VD, W, "dessin", k, workers) and _stable(VB, W, "belyi", k, workers)
    t3 = time.perf_counter()
    return ComparisonReport(
        window=W.max_edges, level=k, dim=W.dim,
        rank_dessin=VD.rank, rank_belyi_inner=VB.rank,
        belyi_in_dessin=b_in_d, dessin_in_belyi_inner=d_in_b,
        stable_at_prev_window=stable, witnesses=witnesses[:max_witnesses],
        generators_dessin=len(dgens), generators_belyi=len(bgens),
        include_empty=W.include_empty,
        timings={"dessin": t1 - t0, "belyi": t2 - t1, "compare": t3 - t2},
    )


#####################################################################
# Quotients of the dessin filtration
#####################################################################

def full_expansions(W: BasisWindow, d: int) -> list[SparseVector]:
    """Expansions of the ``d``-edge window classes with every edge optional, restricted to the window."""
    out = []
    for k in W.keys_with_edges(d):
        v = expansion(from_key(k), range(d))
        if _in_window(v, W):
            out.append(v)
    return out


def spanning_claim_holds(W: BasisWindow, d: int, workers: int = 1,
                         next_span: Subspace | None = None,
                         generators=None) -> bool:
    """
    Whether every level-``d`` generator lies in the level-``d+1`` span plus
    the full expansions of ``d``-edge dessins.
    """
    T = (next_span if next_span is not None else dessin_level_span(W, d + 1, workers)).copy()
    for v in full_expansions(W, d):
        T.insert(v)
    if generators is None:
        generators = dessin_level_generators(W, d, workers)
    return all(v in T for _, v in generators)


def quotient_dimension(W: BasisWindow, d: int, workers: int = 1, verify: bool = True) -> int:
    """
    ``rank V_d - rank V_{d+1}`` inside the window. With ``verify`` the
    spanning claim for level ``d`` is checked and a failure raises.
    """
    if d < 0:
        raise ValueError("level must be non-negative")
    gens = dessin_level_generators(W, d, workers)
    here = span(v for _, v in gens)
    nxt = dessin_level_span(W, d + 1, workers)
    if verify and not spanning_claim_holds(W, d, workers, nxt, gens):
        raise FiltrationError(f"level {d} generators are not spanned by level {d + 1} and {d}-edge expansions")
    return here.rank - nxt.rank


@dataclass
class QuotientRow:
    level: int
    rank: int
    next_rank: int
    quotient_dimension: int
    classes_with_level_edges: int
    spanning_claim: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def quotient_table(W: BasisWindow, max_level: int, workers: int = 1) -> list[QuotientRow]:
    gens = [dessin_level_generators(W, d, workers) for d in range(max_level + 2)]
    spans = [span(v for _, v in g) for g in gens]
    rows = []
    for d in range(max_level + 1):
        rows.append(QuotientRow(
            level=d, rank=spans[d].rank, next_rank=spans[d + 1].rank,
            quotient_dimension=spans[d].rank - spans[d + 1].rank,
            classes_with_level_edges=len(W.keys_with_edges(d)),
            spanning_claim=spanning_claim_holds(W, d, workers, spans[d + 1], gens[d]),
        ))
    return rows
