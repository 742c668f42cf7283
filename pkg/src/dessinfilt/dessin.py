"""
Dessins d'enfants as pairs of permutations on the edge set.

A dessin on ``n`` edges is a pair ``(sigma0, sigma1)`` of permutations of
``{0, ..., n-1}``. The cycles of ``sigma0`` are the black vertices (with
the cyclic order of edges around them), the cycles of ``sigma1`` the white
vertices and the cycles of ``sigma0*sigma1`` the faces. Dessins may be
disconnected and the empty dessin (``n = 0``) is allowed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .permutation import (
    Perm,
    perm_check,
    perm_compose,
    perm_cycle_type,
    perm_num_cycles,
    perms_orbits,
)


class DessinError(ValueError):
    pass


class BoundError(ValueError):
    """A size bound configured to keep a computation at desk scale was exceeded."""


@dataclass(frozen=True)
class Dessin:
    sigma0: Perm
    sigma1: Perm

    @property
    def edges(self) -> int:
        return len(self.sigma0)

    @property
    def faces(self) -> Perm:
        return perm_compose(self.sigma0, self.sigma1)

    def to_json(self) -> dict:
        return {"edges": self.edges, "sigma0": list(self.sigma0), "sigma1": list(self.sigma1)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Dessin":
        try:
            return validate(obj["edges"], obj["sigma0"], obj["sigma1"])
        except (KeyError, TypeError) as e:
            raise DessinError(f"malformed dessin object: {e!r}") from None

    def __str__(self) -> str:
        return f"Dessin({self.edges}, sigma0={list(self.sigma0)}, sigma1={list(self.sigma1)})"


EMPTY = Dessin((), ())
ONE_EDGE = Dessin((0,), (0,))


@dataclass(frozen=True)
class Passport:
    black_degrees: tuple[int, ...]
    white_degrees: tuple[int, ...]
    face_degrees: tuple[int, ...]
    component_count: int
    genus_list: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "black_degrees": list(self.black_degrees),
            "white_degrees": list(self.white_degrees),
            "face_degrees": list(self.face_degrees),
            "component_count": self.component_count,
            "genus_list": list(self.genus_list),
        }


def validate(n, sigma0, sigma1) -> Dessin:
    """
    Build a checked :class:`Dessin` from raw data.

        >>> validate(2, [1, 0], [0, 1])
        Dessin(sigma0=(1, 0), sigma1=(0, 1))
        >>> validate(2, [0, 0], [0, 1])
        Traceback (most recent call last):
        ...
        dessinfilt.dessin.DessinError: sigma0 is not a permutation of 0..1: [0, 0]
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DessinError(f"edge count must be a non-negative integer, got {n!r}")
    for name, p in (("sigma0", sigma0), ("sigma1", sigma1)):
        if not isinstance(p, (list, tuple)):
            raise DessinError(f"{name} must be a list of integers")
        if len(p) != n:
            raise DessinError(f"{name} has length {len(p)} but the dessin has {n} edges")
        if not perm_check(p, n):
            raise DessinError(f"{name} is not a permutation of 0..{n - 1}: {list(p)}")
    return Dessin(tuple(sigma0), tuple(sigma1))


def _check_edges(D: Dessin, edges: Iterable[int]) -> frozenset[int]:
    s = frozenset(edges)
    for e in s:
        if not isinstance(e, int) or not 0 <= e < D.edges:
            raise DessinError(f"edge index {e!r} out of range for a dessin with {D.edges} edges")
    return s


def delete_edges(D: Dessin, T: Iterable[int]) -> tuple[Dessin, dict[int, int]]:
    """
    Remove the edges ``T`` from ``D``.

    Survivors keep their relative order and are relabelled ``0, 1, ...``.
    Around each vertex the deleted edges are skipped, so the cyclic orders
    are restricted. Returns the new dessin and the map old index -> new index
    on surviving edges.

        >>> D = Dessin((1, 2, 0), (0, 1, 2))
        >>> delete_edges(D, {1})
        (Dessin(sigma0=(1, 0), sigma1=(0, 1)), {0: 0, 2: 1})
    """
    T = _check_edges(D, T)
    survivors = [e for e in range(D.edges) if e not in T]
    new = {e: i for i, e in enumerate(survivors)}

    def restrict(p):
        res = []
        for e in survivors:
            f = p[e]
            while f in T:
                f = p[f]
            res.append(new[f])
        return tuple(res)

    return Dessin(restrict(D.sigma0), restrict(D.sigma1)), new


def _sub_dessin(D: Dessin, edges: Sequence[int]) -> Dessin:
    # edges must be a union of orbits
    new = {e: i for i, e in enumerate(edges)}
    return Dessin(tuple(new[D.sigma0[e]] for e in edges), tuple(new[D.sigma1[e]] for e in edges))


def components(D: Dessin) -> list[tuple[Dessin, list[int]]]:
    """Connected components, each relabelled in increasing original order, with its original edges."""
    return [(_sub_dessin(D, orbit), orbit)
            for orbit in perms_orbits((D.sigma0, D.sigma1), D.edges)]


def is_connected(D: Dessin) -> bool:
    return len(perms_orbits((D.sigma0, D.sigma1), D.edges)) == 1


def euler_characteristic(D: Dessin) -> int:
    """``c(sigma0) + c(sigma1) + c(sigma0*sigma1) - n``."""
    return perm_num_cycles(D.sigma0) + perm_num_cycles(D.sigma1) + perm_num_cycles(D.faces) - D.edges


def genus(D: Dessin) -> int:
    """Genus of a connected non-empty dessin."""
    if D.edges == 0:
        raise DessinError("genus is undefined for the empty dessin")
    if not is_connected(D):
        raise DessinError("genus requires a connected dessin")
    chi = euler_characteristic(D)
    assert chi % 2 == 0 and chi <= 2, chi
    return (2 - chi) // 2


def passport(D: Dessin) -> Passport:
    comps = components(D)
    return Passport(
        black_degrees=perm_cycle_type(D.sigma0),
        white_degrees=perm_cycle_type(D.sigma1),
        face_degrees=perm_cycle_type(D.faces),
        component_count=len(comps),
        genus_list=tuple(sorted(genus(C) for C, _ in comps)),
    )


#####################################################################
# Canonical form
#####################################################################

def _traversal(s0: Sequence[int], s1: Sequence[int], start: int, n: int) -> list[int]:
    # order[k] = edge receiving label k
    label = [-1] * n
    label[start] = 0
    order = [start]
    i = 0
    while i < len(order):
        e = order[i]
        i += 1
        for p in (s0, s1):
            f = p[e]
            if label[f] < 0:
                label[f] = len(order)
                order.append(f)
    return order


def _component_word(s0, s1, orbit, marks=None):
    n = len(s0)
    best = None
    best_order = None
    for start in orbit:
        order = _traversal(s0, s1, start, n)
        label = {e: k for k, e in enumerate(order)}
        word = (len(order),) + tuple(label[s0[e]] for e in order) + tuple(label[s1[e]] for e in order)
        if marks is not None:
            word += tuple(1 if e in marks else 0 for e in order)
        if best is None or word < best:
            best = word
            best_order = order
    return best, best_order


def canonical_labeling(D: Dessin, marks: frozenset[int] | None = None):
    """
    Return ``(words, relabel)`` where ``words`` is the sorted tuple of
    component words (a complete isomorphism invariant of ``D``, or of the
    marked pair ``(D, marks)``) and ``relabel[e]`` is the canonical label of
    edge ``e``.
    """
    s0, s1 = D.sigma0, D.sigma1
    comps = [_component_word(s0, s1, orbit, marks)
             for orbit in perms_orbits((s0, s1), D.edges)]
    comps.sort(key=lambda wo: wo[0])
    relabel = [0] * D.edges
    offset = 0
    for word, order in comps:
        for k, e in enumerate(order):
            relabel[e] = offset + k
        offset += len(order)
    return tuple(w for w, _ in comps), relabel


def format_key(D: Dessin) -> str:
    return "{}:{}/{}".format(D.edges, ",".join(map(str, D.sigma0)), ",".join(map(str, D.sigma1)))


def canonical_form(D: Dessin) -> tuple[str, Dessin]:
    """
    Canonical key and canonical representative of the isomorphism class of ``D``.

        >>> canonical_form(Dessin((1, 0), (0, 1)))
        ('2:1,0/0,1', Dessin(sigma0=(1, 0), sigma1=(0, 1)))
        >>> canonical_form(EMPTY)[0]
        '0:/'
    """
    _, relabel = canonical_labeling(D)
    n = D.edges
    c0 = [0] * n
    c1 = [0] * n
    for e in range(n):
        c0[relabel[e]] = relabel[D.sigma0[e]]
        c1[relabel[e]] = relabel[D.sigma1[e]]
    C = Dessin(tuple(c0), tuple(c1))
    return format_key(C), C


def canonical_key(D: Dessin) -> str:
    return canonical_form(D)[0]


def from_key(key: str) -> Dessin:
    """Parse a key of the form ``n:a0,a1,.../b0,b1,...``."""
    try:
        head, rest = key.split(":", 1)
        a, b = rest.split("/", 1)
        n = int(head)
        s0 = [int(x) for x in a.split(",")] if a else []
        s1 = [int(x) for x in b.split(",")] if b else []
    except ValueError:
        raise DessinError(f"malformed canonical key {key!r}") from None
    return validate(n, s0, s1)


def key_edges(key: str) -> int:
    return int(key.split(":", 1)[0])


def key_order(key: str) -> tuple[int, str]:
    """Sort key for canonical keys: edge count, then the key text."""
    return (key_edges(key), key)


def isomorphic(D1: Dessin, D2: Dessin) -> bool:
    if D1.edges != D2.edges:
        return False
    return canonical_labeling(D1)[0] == canonical_labeling(D2)[0]


def monodromy_order(D: Dessin, bound: int = 8) -> int:
    """Order of the group generated by ``sigma0`` and ``sigma1``, by closure enumeration."""
    n = D.edges
    if n > bound:
        raise BoundError(f"monodromy_order is limited to {bound} edges, got {n}")
    if not is_connected(D):
        raise DessinError("monodromy_order requires a connected dessin")
    gens = (D.sigma0, D.sigma1)
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = perm_compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)
