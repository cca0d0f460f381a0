import random

import pytest
from hypothesis import given, settings, strategies as st

from radiogrid.constructions import rn_ordering
from radiogrid.grid import GridGraph
from radiogrid.labeling import (
    LabelingError,
    bump_condition_holds,
    bump_condition_holds_summed,
    min_span_labeling,
    ordering_of,
    span,
    step_report,
    tightness_neighbors,
    trivial_labeling,
    validate,
)


@st.composite
def ordered_grid(draw, lo=3, hi=6):
    a = draw(st.integers(lo, hi))
    b = draw(st.integers(lo, hi))
    g = GridGraph(a, b)
    return g, draw(st.permutations(list(g.vertices())))


def test_validate_all_zero():
    g = GridGraph(3, 3)
    f = {v: 0 for v in g.vertices()}
    bad = validate(g, f)
    assert len(bad) == 36
    assert len({frozenset((v.u, v.v)) for v in bad}) == 36
    assert all(v.actual_gap < v.required_gap for v in bad)


def test_validate_missing_vertex():
    g = GridGraph(3, 3)
    f = {v: 4 * i for i, v in enumerate(g.vertices())}
    del f[(2, 2)]
    with pytest.raises(LabelingError):
        validate(g, f)


def test_validate_optimal_6x5():
    g = GridGraph(6, 5)
    assert validate(g, min_span_labeling(g, rn_ordering(g))) == []


@given(ordered_grid())
def test_trivial_labeling_is_radio(data):
    g, s = data
    f = trivial_labeling(g, s)
    assert validate(g, f) == []
    assert span(f) == g.D * (g.n - 1)


def test_span_examples():
    assert span({(1, 1): 0}) == 0
    g = GridGraph(3, 3)
    assert span(trivial_labeling(g, list(g.vertices()))) == 32
    assert span(min_span_labeling(g, rn_ordering(g))) == 17
    with pytest.raises(LabelingError):
        span({})


def test_ordering_of():
    A, B, C = (1, 1), (1, 2), (1, 3)
    assert ordering_of({A: 0, B: 5, C: 3}) == [A, C, B]
    with pytest.raises(LabelingError):
        ordering_of({A: 1, B: 1})


def test_min_span_rejects_bad_ordering():
    g = GridGraph(3, 3)
    V = list(g.vertices())
    with pytest.raises(LabelingError):
        min_span_labeling(g, V[:-1])
    with pytest.raises(LabelingError):
        min_span_labeling(g, V[:-1] + [V[0]])


@given(ordered_grid())
def test_min_span_labeling_properties(data):
    g, s = data
    f = min_span_labeling(g, s)
    labels = [f[v] for v in s]
    assert labels[0] == 0
    assert all(x < y for x, y in zip(labels, labels[1:]))
    assert ordering_of(f) == list(s)
    assert validate(g, f) == []
    # each label is forced: lowering it by one breaks some earlier pair
    for i in range(1, len(s)):
        u = s[i]
        assert any(
            labels[i] - 1 - labels[j] < g.D + 1 - abs(u[0] - s[j][0]) - abs(u[1] - s[j][1])
            for j in range(i)
        )


@given(ordered_grid())
def test_step_report_identities(data):
    g, s = data
    r = step_report(g, s)
    n, D = g.n, g.D
    assert len(r.d) == len(r.f_gaps) == len(r.bumps) == n - 1
    assert all(b >= 0 for b in r.bumps)
    f = min_span_labeling(g, s)
    assert sum(r.f_gaps) == span(f)
    assert span(f) == (n - 1) * (D + 1) - sum(d - b for d, b in zip(r.d, r.bumps))
    assert [e.step for e in r.bump_events] == [i + 1 for i, b in enumerate(r.bumps) if b > 0]


@settings(max_examples=50)
@given(ordered_grid(hi=5))
def test_zero_bump_iff_tight_predecessor(data):
    g, s = data
    f = min_span_labeling(g, s)
    r = step_report(g, s)
    for i in range(1, len(s)):
        assert (r.bumps[i - 1] == 0) == (s[i - 1] in tightness_neighbors(g, f, s[i]))


@given(ordered_grid(hi=5))
def test_bump_offset_and_condition(data):
    g, s = data
    r = step_report(g, s)
    for e in r.bump_events:
        assert e.offset == 2
    for i in range(2, len(s)):
        predicted = bump_condition_holds(g, s[i - 2], s[i - 1], s[i], r.bumps[i - 2])
        assert predicted == (r.bumps[i - 1] > 0)


def test_summed_threshold_is_not_exact():
    # a witness where the summed form misses a bump the engine observes
    g = GridGraph(3, 3)
    rng = random.Random(0)
    V = list(g.vertices())
    for _ in range(2000):
        rng.shuffle(V)
        r = step_report(g, V)
        for i in range(3, len(V)):
            summed = bump_condition_holds_summed(
                g, V[i - 2], V[i - 1], V[i], r.bumps[i - 2], r.bumps[i - 3]
            )
            if summed != (r.bumps[i - 1] > 0):
                return
    pytest.fail("summed form never disagreed")


def test_tightness_neighbors():
    g = GridGraph(4, 4)
    s = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 4), (2, 3), (2, 2), (2, 1)]
    s += [(x, y) for x in (3, 4) for y in range(1, 5)]
    f = trivial_labeling(g, s)
    for u, v in zip(s, s[1:]):
        if abs(u[0] - v[0]) + abs(u[1] - v[1]) == 1:
            assert v in tightness_neighbors(g, f, u)
    f = min_span_labeling(g, list(g.vertices()))
    for u in g.vertices():
        for v in tightness_neighbors(g, f, u):
            assert u in tightness_neighbors(g, f, v)


def test_first_vertex_tight_with_second():
    g = GridGraph(5, 7)
    s = rn_ordering(g)
    f = min_span_labeling(g, s)
    assert s[1] in tightness_neighbors(g, f, s[0])


def test_bump_condition_examples():
    g = GridGraph(6, 6)
    s = rn_ordering(g)
    # opening triple of the even x even ordering forces the first bump
    assert 2 * step_report(g, s).d_rect[1] == g.D + 2
    assert bump_condition_holds(g, s[0], s[1], s[2], 0)
    assert not bump_condition_holds(g, (1, 1), (2, 2), (3, 3), 0)
    with pytest.raises(LabelingError):
        bump_condition_holds(g, (1, 1), (2, 2), (3, 3), -1)
    h = GridGraph(6, 5)
    t = rn_ordering(h)
    assert not any(bump_condition_holds(h, t[i - 2], t[i - 1], t[i], 0) for i in range(2, h.n))
