"""
Independent reference computations used as ground truth in tests.

Nothing here goes through the library's canonical form, echelon code or
product routine, except where a result must be expressed as a key.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

import sympy
from sympy.combinatorics import Permutation as SymPerm, PermutationGroup


def conj(p, pi):
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[pi[i]] = pi[j]
    return tuple(r)


def brute_isomorphic(a, b):
    """Search all relabelings pi with pi a pi^-1 = b."""
    (a0, a1), (b0, b1) = a, b
    if len(a0) != len(b0):
        return False
    for pi in itertools.permutations(range(len(a0))):
        if conj(a0, pi) == b0 and conj(a1, pi) == b1:
            return True
    return False


def transitive(s0, s1):
    n = len(s0)
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (s0[x], s1[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def conjugacy_orbits(n, connected=False):
    """Orbits of S_n acting by simultaneous conjugation on pairs, computed directly."""
    perms = list(itertools.permutations(range(n)))
    remaining = {(a, b) for a in perms for b in perms if not connected or transitive(a, b)}
    orbits = []
    while remaining:
        a, b = min(remaining)
        orbit = {(conj(a, pi), conj(b, pi)) for pi in perms}
        remaining -= orbit
        orbits.append(orbit)
    return orbits


def burnside_brute(n):
    """(1/n!) sum over g in S_n of |C(g)|^2, centralizers counted by brute force."""
    perms = list(itertools.permutations(range(n)))
    total = 0
    for g in perms:
        c = sum(1 for h in perms if conj(g, h) == g)
        total += c * c
    assert total % factorial(n) == 0
    return total // factorial(n)


def count_cycles(p):
    seen = set()
    c = 0
    for i in range(len(p)):
        if i not in seen:
            c += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = p[j]
    return c


def group_order(s0, s1):
    if len(s0) <= 1:
        return 1
    return PermutationGroup([SymPerm(list(s0)), SymPerm(list(s1))]).order()


def dense_rank(vectors, keys=None):
    """Rank of the matrix whose rows are the given {key: coeff} maps (sympy, exact)."""
    vectors = [dict(v) for v in vectors]
    if keys is None:
        keys = sorted({k for v in vectors for k in v})
    if not vectors or not keys:
        return 0
    M = sympy.Matrix([[sympy.Rational(Fraction(v.get(k, 0)).numerator, Fraction(v.get(k, 0)).denominator)
                       for k in keys] for v in vectors])
    return M.rank()


def _cycles(p):
    out = []
    seen = set()
    for i in range(len(p)):
        if i in seen:
            continue
        c = []
        j = i
        while j not in seen:
            seen.add(j)
            c.append(j)
            j = p[j]
        out.append(c)
    return out


class _Cover:
    # a dessin seen through its vertex rotations: lifting the loop around a
    # black (white) point moves an edge to the next edge around its vertex

    def __init__(self, s0, s1):
        self.n = len(s0)
        self.rot = []
        for p in (s0, s1):
            nxt = {}
            for c in _cycles(p):
                for k, e in enumerate(c):
                    nxt[e] = c[(k + 1) % len(c)]
            self.rot.append(nxt)

    def lift(self, e, loop):
        return self.rot[loop][e]


def path_lifting_product(d1, d2):
    """
    Components of the fiber product as standalone (sigma0, sigma1) pairs,
    found by lifting both base loops through both covers one edge pair at a time.
    """
    c1, c2 = _Cover(*d1), _Cover(*d2)
    pairs = [(i, j) for i in range(c1.n) for j in range(c2.n)]
    done = set()
    comps = []
    for start in pairs:
        if start in done:
            continue
        comp = [start]
        done.add(start)
        k = 0
        while k < len(comp):
            i, j = comp[k]
            k += 1
            for loop in (0, 1):
                q = (c1.lift(i, loop), c2.lift(j, loop))
                if q not in done:
                    done.add(q)
                    comp.append(q)
        idx = {q: t for t, q in enumerate(comp)}
        s0 = tuple(idx[(c1.lift(i, 0), c2.lift(j, 0))] for i, j in comp)
        s1 = tuple(idx[(c1.lift(i, 1), c2.lift(j, 1))] for i, j in comp)
        comps.append((s0, s1))
    return comps
