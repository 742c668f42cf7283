import itertools

import pytest

from dessinfilt.permutation import (
    partitions,
    perm_check,
    perm_compose,
    perm_conjugate,
    perm_cycle_type,
    perm_from_cycles,
    perm_invert,
    perm_of_cycle_type,
    perms_orbits,
)


@pytest.mark.parametrize("p, n, ok", [
    ([1, 0, 3, 2], 4, True),
    ([0, 0], 2, False),
    ([0, 2], 2, False),
    ([-1, 0], 2, False),
    ([1, 0], 3, False),
    ([], 0, True),
])
def test_perm_check(p, n, ok):
    assert perm_check(p, n) is ok


def test_compose_convention():
    p = (1, 2, 0)
    q = (1, 0, 2)
    # (p*q)(x) = p(q(x))
    assert perm_compose(p, q) == tuple(p[q[x]] for x in range(3))


def test_invert_and_conjugate():
    for p in itertools.permutations(range(4)):
        assert perm_compose(p, perm_invert(p)) == (0, 1, 2, 3)
        for pi in itertools.permutations(range(4)):
            c = perm_conjugate(p, pi)
            assert c == perm_compose(pi, perm_compose(p, perm_invert(pi)))


def test_cycles():
    assert perm_from_cycles([(0, 2)], 3) == (2, 1, 0)
    assert perm_cycle_type((1, 0, 3, 4, 2)) == (2, 3)
    assert perms_orbits([(1, 0, 2, 3), (0, 1, 3, 2)], 4) == [[0, 1], [2, 3]]


def test_partitions():
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    for shape in partitions(5):
        assert tuple(sorted(shape)) == perm_cycle_type(perm_of_cycle_type(shape))
