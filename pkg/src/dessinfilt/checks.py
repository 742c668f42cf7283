"""
Randomized invariant checks, shared by the ``check`` subcommand and the test suite.

Each check returns the number of violations found.
"""
from __future__ import annotations

import random
from math import lcm

from .dessin import (
    Dessin,
    canonical_form,
    components,
    delete_edges,
    euler_characteristic,
)
from .filtration import expansion, product
from .permutation import perm_conjugate, perm_cycle_type


def random_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def random_dessin(rng: random.Random, n: int) -> Dessin:
    return Dessin(random_perm(rng, n), random_perm(rng, n))


def conjugate(D: Dessin, pi) -> Dessin:
    return Dessin(perm_conjugate(D.sigma0, pi), perm_conjugate(D.sigma1, pi))


def check_canonical(rng: random.Random, trials: int = 1000, max_edges: int = 7) -> int:
    bad = 0
    for _ in range(trials):
        n = rng.randint(0, max_edges)
        D = random_dessin(rng, n)
        key, C = canonical_form(D)
        if canonical_form(conjugate(D, random_perm(rng, n)))[0] != key:
            bad += 1
        if canonical_form(C)[0] != key:
            bad += 1
    return bad


def check_euler(D: Dessin) -> int:
    bad = 0
    for C, _ in components(D):
        chi = euler_characteristic(C)
        if chi % 2 or chi > 2:
            bad += 1
    return bad


def check_expansion_recurrence(rng: random.Random, trials: int = 500, max_edges: int = 6) -> int:
    bad = 0
    for _ in range(trials):
        n = rng.randint(1, max_edges)
        D = random_dessin(rng, n)
        S = sorted(rng.sample(range(n), rng.randint(1, n)))
        e = rng.choice(S)
        rest = [x for x in S if x != e]
        De, surv = delete_edges(D, {e})
        lhs = expansion(D, S)
        rhs = expansion(D, rest) - expansion(De, [surv[x] for x in rest])
        if lhs != rhs:
            bad += 1
    return bad


def check_product_laws(rng: random.Random, trials: int = 200, max_product: int = 48) -> int:
    """Identity, commutativity, associativity, degree and lcm ramification."""
    bad = 0
    one = Dessin((0,), (0,))
    for _ in range(trials):
        while True:
            sizes = [rng.randint(1, 4) for _ in range(3)]
            if sizes[0] * sizes[1] * sizes[2] <= max_product:
                break
        A, B, C = (random_dessin(rng, s) for s in sizes)
        key = lambda D: canonical_form(D)[0]
        AB = product(A, B)
        if key(product(one, A)) != key(A):
            bad += 1
        if key(AB) != key(product(B, A)):
            bad += 1
        if key(product(AB, C)) != key(product(A, product(B, C))):
            bad += 1
        if AB.edges != A.edges * B.edges:
            bad += 1
        for s, sa, sb in ((AB.sigma0, A.sigma0, B.sigma0), (AB.sigma1, A.sigma1, B.sigma1)):
            allowed = {lcm(x, y) for x in perm_cycle_type(sa) for y in perm_cycle_type(sb)}
            if not set(perm_cycle_type(s)) <= allowed:
                bad += 1
    return bad


def run_all(seed: int, scale: float = 1.0) -> dict[str, int]:
    rng = random.Random(seed)
    t = lambda k: max(1, int(k * scale))
    euler = sum(check_euler(random_dessin(rng, rng.randint(1, 7))) for _ in range(t(500)))
    return {
        "canonical_form": check_canonical(rng, t(1000)),
        "euler": euler,
        "expansion_recurrence": check_expansion_recurrence(rng, t(500)),
        "product_laws": check_product_laws(rng, t(200)),
    }
