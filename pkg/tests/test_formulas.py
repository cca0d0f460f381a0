import pytest

from radiogrid.formulas import (
    calles_bounds_check,
    calles_interval,
    max_dx_formula,
    rn_formula,
    rn_lower_bound,
    rn_upper_bound_trivial,
    t_plus_formula,
)
from radiogrid.grid import GridGraph, UnsupportedSize

SIZES = [(a, b) for a in range(3, 41) for b in range(3, 41)]


@pytest.mark.parametrize("a,b,value", [(4, 4, 61), (4, 3, 39), (3, 4, 39), (3, 3, 23)])
def test_t_plus_examples(a, b, value):
    assert t_plus_formula(a, b) == value


@pytest.mark.parametrize(
    "a,b,value", [(3, 3, 17), (4, 3, 27), (6, 6, 174), (6, 5, 129), (5, 7, 171), (4, 4, 46)]
)
def test_rn_examples(a, b, value):
    assert rn_formula(a, b) == value


@pytest.mark.parametrize("a,b,value", [(6, 4, 71), (5, 4, 48), (3, 3, 12)])
def test_max_dx_examples(a, b, value):
    assert max_dx_formula(a, b) == value


def test_bounds_examples():
    assert rn_lower_bound(GridGraph(4, 3)) == 27
    assert rn_lower_bound(GridGraph(6, 6)) == 172
    assert rn_lower_bound(GridGraph(3, 3)) == 17
    assert rn_upper_bound_trivial(GridGraph(3, 3)) == 32
    assert rn_upper_bound_trivial(GridGraph(4, 4)) == 90


@pytest.mark.parametrize("a,b", [(2, 5), (5, 2), (1, 3)])
def test_small_sizes_rejected(a, b):
    with pytest.raises(UnsupportedSize):
        t_plus_formula(a, b)
    with pytest.raises(UnsupportedSize):
        rn_formula(a, b)


def test_derivation_identity():
    for a, b in SIZES:
        bonus = 2 if a % 2 == 0 and b % 2 == 0 else 0
        assert rn_formula(a, b) == (a * b - 1) * (a + b - 1) - t_plus_formula(a, b) + bonus


def test_t_plus_from_max_dx():
    for a, b in SIZES:
        mixed = (a % 2) != (b % 2)
        expect = max_dx_formula(a, b) + max_dx_formula(b, a) - (0 if mixed else 1)
        assert t_plus_formula(a, b) == expect


def test_transpose_symmetry():
    for a, b in SIZES:
        assert t_plus_formula(a, b) == t_plus_formula(b, a)
        assert rn_formula(a, b) == rn_formula(b, a)


def test_bounds_sandwich():
    for a, b in SIZES:
        g = GridGraph(a, b)
        assert rn_lower_bound(g) <= rn_formula(a, b) <= rn_upper_bound_trivial(g)


def test_calles_examples():
    assert calles_interval(4) == (44, 49)
    assert calles_bounds_check(4)
    assert rn_formula(5, 5) == calles_interval(5)[0]
    assert all(calles_bounds_check(n) for n in range(3, 51))


def test_even_even_constant_is_six():
    # the +4 variant would undercut the oracle-certified 46 on G_{4,4}
    a = b = 4
    assert (a * a * b + b * b * a) // 2 - a * b - a - b + 4 == 44
    assert rn_formula(4, 4) == 46
