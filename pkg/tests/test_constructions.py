import pytest

from radiogrid.constructions import (
    max_dx_ordering,
    optimal_labeling,
    rn_ordering,
    t_plus_ordering,
)
from radiogrid.formulas import max_dx_formula, rn_formula, t_plus_formula
from radiogrid.grid import GridGraph, ParityCase, UnsupportedSize, classify_region, Region
from radiogrid.labeling import ordering_of, span, step_report, validate

SIZES = [(a, b) for a in range(3, 21) for b in range(3, 21)]


def dist_sum(s):
    return sum(abs(u[0] - v[0]) + abs(u[1] - v[1]) for u, v in zip(s, s[1:]))


def dx_sum(s):
    return sum(abs(u[0] - v[0]) for u, v in zip(s, s[1:]))


@pytest.mark.parametrize("a,b", [(a, b) for a in range(2, 10) for b in range(2, 8)])
def test_max_dx_ordering(a, b):
    g = GridGraph(a, b)
    s = max_dx_ordering(g)
    assert sorted(s) == sorted(g.vertices())
    assert dx_sum(s) == max_dx_formula(a, b)
    if a % 2 == 0:
        assert s[0][0] == a // 2 and s[-1][0] == a // 2 + 1
        sides = [x <= a // 2 for x, _ in s]
        assert all(p != q for p, q in zip(sides, sides[1:]))
    else:
        c = (a + 1) // 2
        assert s[0][0] == s[-1][0] == c
        sides = [(x > c) - (x < c) for x, _ in s]
        assert all(p * q <= 0 for p, q in zip(sides, sides[1:]))


def test_max_dx_examples():
    assert dx_sum(max_dx_ordering(GridGraph(6, 4))) == 71
    assert dx_sum(max_dx_ordering(GridGraph(5, 4))) == 48


def test_unsupported_sizes():
    for a, b in [(2, 5), (5, 2), (2, 2)]:
        with pytest.raises(UnsupportedSize):
            rn_ordering(GridGraph(a, b))
        with pytest.raises(UnsupportedSize):
            optimal_labeling(GridGraph(a, b))


@pytest.mark.parametrize("a,b", SIZES)
def test_certificates(a, b):
    g = GridGraph(a, b)
    s = rn_ordering(g)
    assert sorted(s) == sorted(g.vertices())
    assert dist_sum(t_plus_ordering(g)) == t_plus_formula(a, b)
    f = optimal_labeling(g)
    assert span(f) == rn_formula(a, b)
    assert min(f.values()) == 0
    assert validate(g, f) == []
    assert ordering_of(f) == s
    r = step_report(g, s)
    assert r.distance_sum == t_plus_formula(a, b)
    events = [(e.step, e.magnitude, e.offset) for e in r.bump_events]
    if g.parity_case() is ParityCase.EVEN_EVEN:
        assert events == [(2, 1, 2), (g.n - 2, 1, 2)]
    else:
        assert events == []


def test_spans_reference_sizes():
    assert span(optimal_labeling(GridGraph(6, 5))) == 129
    assert span(optimal_labeling(GridGraph(6, 6))) == 174
    assert span(optimal_labeling(GridGraph(5, 7))) == 171
    assert span(optimal_labeling(GridGraph(3, 3))) == 17


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4, 21, 2) for b in range(a, 21, 2)])
def test_even_even_shape(a, b):
    s = rn_ordering(GridGraph(a, b))
    assert s[0] == (a // 2 + 1, b // 2 + 1)
    assert s[-1] == (a // 2, b // 2 + 1)
    g = GridGraph(a, b)
    regions = [classify_region(g, v) for v in s]
    half = g.n // 2
    assert set(regions[:half]) == {Region.QUADRANT_I, Region.QUADRANT_III}
    assert set(regions[half:]) == {Region.QUADRANT_II, Region.QUADRANT_IV}
    assert s[half] == (a, b // 2)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4, 21, 2) for b in range(3, 21, 2)])
def test_even_odd_shape(a, b):
    g = GridGraph(a, b)
    s = rn_ordering(g)
    mid = (b + 1) // 2
    assert s[0] == (a // 2, mid)
    assert s[-1] == (a // 2 + 1, mid)
    r = step_report(g, s)
    part = (a // 2) * (b - 1) // 2 * 2
    D = g.D
    # middles of the two quadrant phases sit exactly (D+1)/2 off the rectangle
    for i in list(range(1, 1 + part)) + list(range(g.n - 1 - part, g.n - 1)):
        assert 2 * r.d_rect[i] == D + 1
    for i in range(1 + part, g.n - 1 - part):
        assert r.d_rect[i] <= a // 2 + 1


@pytest.mark.parametrize("a,b", [(a, b) for a in range(3, 21, 2) for b in range(a, 21, 2)])
def test_odd_odd_shape(a, b):
    g = GridGraph(a, b)
    s = rn_ordering(g)
    c, m = (a + 1) // 2, (b + 1) // 2
    assert s[0] == (c, m) and s[-1] == (c, m - 1)
    for u, v in zip(s, s[1:]):
        assert (u[0] - c) * (v[0] - c) <= 0
        assert (u[1] - m) * (v[1] - m) <= 0
    r = step_report(g, s)
    assert all(2 * x < g.D + 1 for x in r.d_rect)


@pytest.mark.parametrize("a,b", [(5, 4), (7, 5), (6, 4), (9, 3), (3, 8)])
def test_orientation_mapped_back(a, b):
    g = GridGraph(a, b)
    s = rn_ordering(g)
    assert sorted(s) == sorted(g.vertices())
    f = optimal_labeling(g)
    assert validate(g, f) == []
    assert span(f) == rn_formula(a, b)


def test_deterministic():
    for a, b in [(7, 9), (6, 6), (6, 5)]:
        assert rn_ordering(GridGraph(a, b)) == rn_ordering(GridGraph(a, b))


@pytest.mark.parametrize("a,b", [(21, 29), (25, 25), (31, 33), (41, 41)])
def test_odd_odd_beyond_sweep(a, b):
    g = GridGraph(a, b)
    r = step_report(g, rn_ordering(g))
    assert r.bump_events == []
    assert r.distance_sum == t_plus_formula(a, b)
