"""
Helpers for permutations stored as image tuples.

A permutation ``p`` of ``{0, ..., n-1}`` is a sequence with ``p[i]`` the
image of ``i``. Composition follows ``(p*q)(x) = p(q(x))``.
"""
from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def perm_check(p: Sequence[int], n: int | None = None) -> bool:
    """Return whether ``p`` is a bijection of ``{0, ..., n-1}``."""
    if n is None:
        n = len(p)
    if len(p) != n:
        return False
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0 or x >= n or seen[x]:
            return False
        seen[x] = True
    return True


def perm_id(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Return ``p*q``, i.e. ``x -> p[q[x]]``."""
    return tuple(p[x] for x in q)


def perm_invert(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_conjugate(p: Sequence[int], pi: Sequence[int]) -> Perm:
    """Return ``pi * p * pi^-1``: if ``p`` sends ``i`` to ``j`` the result sends ``pi[i]`` to ``pi[j]``."""
    res = [0] * len(p)
    for i, j in enumerate(p):
        res[pi[i]] = pi[j]
    return tuple(res)


def perm_cycles(p: Sequence[int]) -> list[list[int]]:
    """
    Cycles of ``p`` (singletons included), each starting at its least
    element, ordered by that element.

        >>> perm_cycles((1, 2, 0, 3))
        [[0, 1, 2], [3]]
    """
    n = len(p)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i]:
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = p[j]
        cycles.append(c)
    return cycles


def perm_num_cycles(p: Sequence[int]) -> int:
    return len(perm_cycles(p))


def perm_cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Sorted (ascending) cycle lengths."""
    return tuple(sorted(len(c) for c in perm_cycles(p)))


def perm_order(p: Sequence[int]) -> int:
    return lcm(*perm_cycle_type(p)) if p else 1


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    """
        >>> perm_from_cycles([(0, 1, 2)], 4)
        (1, 2, 0, 3)
    """
    p = list(range(n))
    for c in cycles:
        for k, x in enumerate(c):
            p[x] = c[(k + 1) % len(c)]
    if not perm_check(p, n):
        raise ValueError("cycles do not define a permutation")
    return tuple(p)


def perms_orbits(perms: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """
    Orbits of the group generated by ``perms`` on ``{0, ..., n-1}``.

    Each orbit is sorted; orbits are ordered by their least element.
    """
    seen = [False] * n
    orbits = []
    for i in range(n):
        if seen[i]:
            continue
        seen[i] = True
        orbit = [i]
        k = 0
        while k < len(orbit):
            x = orbit[k]
            k += 1
            for p in perms:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
        orbit.sort()
        orbits.append(orbit)
    return orbits


def perms_are_transitive(perms: Sequence[Sequence[int]], n: int) -> bool:
    return n > 0 and len(perms_orbits(perms, n)) == 1


def partitions(n: int, largest: int | None = None):
    """
    Integer partitions of ``n`` as non-increasing tuples.

        >>> list(partitions(3))
        [(3,), (2, 1), (1, 1, 1)]
    """
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def perm_of_cycle_type(shape: Sequence[int]) -> Perm:
    """Standard representative: consecutive blocks are cycles."""
    n = sum(shape)
    p = list(range(n))
    start = 0
    for k in shape:
        for i in range(k):
            p[start + i] = start + (i + 1) % k
        start += k
    return tuple(p)
