"""
Enumeration of isomorphism classes of dessins and basis windows.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial, prod
from collections import Counter

from .dessin import BoundError, Dessin, canonical_key, from_key, key_order
from .permutation import partitions, perm_of_cycle_type, perms_are_transitive

MODES = ("all", "connected")
DEFAULT_BOUND = 7
ORACLE_BOUND = 6


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _block(shape: tuple[int, ...], connected: bool) -> set[str]:
    # all classes whose sigma0 has cycle type `shape`
    n = sum(shape)
    s0 = perm_of_cycle_type(shape)
    keys = set()
    for s1 in itertools.permutations(range(n)):
        if connected and not perms_are_transitive((s0, s1), n):
            continue
        keys.add(canonical_key(Dessin(s0, s1)))
    return keys


def enumerate_exact(n: int, mode: str = "all", bound: int = DEFAULT_BOUND, workers: int = 1) -> list[str]:
    """
    Canonical keys of all dessins with ``n`` edges, one per isomorphism class.

    Every class has a representative whose ``sigma0`` is the standard
    permutation of its cycle type, so it suffices to let ``sigma0`` run over
    one permutation per partition of ``n`` and ``sigma1`` over all of S_n.

        >>> len(enumerate_exact(3)), len(enumerate_exact(3, "connected"))
        (11, 7)
    """
    _check_mode(mode)
    if n < 0:
        raise ValueError("edge count must be non-negative")
    if n > bound:
        raise BoundError(f"enumeration is limited to {bound} edges, got {n}")
    if n == 0:
        return [] if mode == "connected" else ["0:/"]
    shapes = list(partitions(n))
    connected = mode == "connected"
    if workers > 1 and len(shapes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            blocks = list(ex.map(_block, shapes, itertools.repeat(connected)))
    else:
        blocks = [_block(s, connected) for s in shapes]
    return sorted(set().union(*blocks))


def oracle_enumerate(n: int, mode: str = "all") -> list[str]:
    """Reference enumeration scanning all ``n!**2`` permutation pairs."""
    _check_mode(mode)
    if n > ORACLE_BOUND:
        raise BoundError(f"oracle enumeration is limited to {ORACLE_BOUND} edges, got {n}")
    perms = list(itertools.permutations(range(n)))
    keys = set()
    for s0 in perms:
        for s1 in perms:
            if mode == "connected" and not perms_are_transitive((s0, s1), n):
                continue
            keys.add(canonical_key(Dessin(s0, s1)))
    return sorted(keys)


def centralizer_order(shape: tuple[int, ...]) -> int:
    """Order of the centralizer in S_n of a permutation of the given cycle type."""
    return prod(k ** m * factorial(m) for k, m in Counter(shape).items())


def burnside_count(n: int) -> int:
    """
    Number of pairs in S_n x S_n up to simultaneous conjugacy,
    ``(1/n!) sum_g |C(g)|^2``, grouped by conjugacy class.
    """
    total = sum(factorial(n) * centralizer_order(shape) for shape in partitions(n))
    assert total % factorial(n) == 0
    return total // factorial(n)


@dataclass(frozen=True)
class BasisWindow:
    """All classes with at most ``max_edges`` edges, in window order."""
    max_edges: int
    keys: tuple[str, ...]
    mode: str = "all"
    include_empty: bool = True
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {k: i for i, k in enumerate(self.keys)})
        if len(self.index) != len(self.keys):
            raise ValueError("duplicate keys in basis window")
        if list(self.keys) != sorted(self.keys, key=key_order):
            raise ValueError("basis window keys are not in window order")

    @classmethod
    def from_blocks(cls, max_edges: int, blocks, mode: str = "all", include_empty: bool = True) -> "BasisWindow":
        """Assemble from per-edge-count key lists ``blocks[0..max_edges]``."""
        keys = []
        for n, block in enumerate(blocks):
            if n == 0 and not (mode == "all" and include_empty):
                continue
            keys.extend(sorted(block))
        return cls(max_edges, tuple(keys), mode, include_empty)

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key: str) -> bool:
        return key in self.index

    @property
    def dim(self) -> int:
        return len(self.keys)

    def dessins(self):
        for k in self.keys:
            yield k, from_key(k)

    def keys_with_edges(self, n: int) -> list[str]:
        return [k for k in self.keys if key_order(k)[0] == n]

    def restrict(self, max_edges: int) -> "BasisWindow":
        """Sub-window of classes with at most ``max_edges`` edges."""
        return BasisWindow(max_edges, tuple(k for k in self.keys if key_order(k)[0] <= max_edges),
                           self.mode, self.include_empty)


def enumerate_window(N: int, mode: str = "all", include_empty: bool = True,
                     bound: int = DEFAULT_BOUND, workers: int = 1) -> BasisWindow:
    """
        >>> enumerate_window(3).dim
        17
    """
    _check_mode(mode)
    if N < 0:
        raise ValueError("window size must be non-negative")
    if N > bound:
        raise BoundError(f"windows are limited to {bound} edges, got {N}")
    blocks = [enumerate_exact(n, mode, bound, workers) for n in range(N + 1)]
    return BasisWindow.from_blocks(N, blocks, mode, include_empty)
