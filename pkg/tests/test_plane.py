import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pindot.ffield import make_field
from pindot.plane import (
    INFINITY,
    Direction,
    Line,
    Point,
    PointSet,
    all_directions,
    all_lines,
    difference_set,
    direction_of,
    direction_vector,
    directions_determined,
    dot,
    dot_set,
    line_points,
    line_through,
    normal_vector,
    on_line,
    scale,
)
from oracles import lines_as_point_sets

PLANE_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def test_dot_examples(gf4):
    gf5 = make_field(5)
    assert dot(gf5, (1, 2), (3, 4)) == 1
    assert dot(gf5, (3, 4), (0, 0)) == 0
    assert dot(gf4, (2, 1), (2, 3)) == 0


def test_dot_field_mismatch():
    with pytest.raises(ValueError):
        dot(make_field(3), (0, 5), (1, 1))


def test_direction_vector():
    assert direction_vector(Direction(0)) == (1, 0)
    assert direction_vector(INFINITY) == (0, 1)
    assert direction_vector(Direction(2)) == (1, 2)


def test_direction_of_examples():
    gf7 = make_field(7)
    assert direction_of(gf7, (0, 5)) == INFINITY
    assert direction_of(gf7, (2, 6)) == Direction(3)
    with pytest.raises(ValueError):
        direction_of(gf7, (0, 0))


@pytest.mark.parametrize("p,k", PLANE_FIELDS)
def test_direction_round_trip(p, k):
    spec = make_field(p, k)
    dirs = all_directions(spec)
    assert len(set(dirs)) == spec.q + 1
    for theta in dirs:
        assert direction_of(spec, direction_vector(theta)) == theta
        for lam in range(1, spec.q):
            assert direction_of(spec, scale(spec, lam, direction_vector(theta))) == theta
        assert dot(spec, direction_vector(theta), normal_vector(spec, theta)) == 0


def test_direction_order_and_text():
    assert sorted([INFINITY, Direction(2), Direction(0)]) == [Direction(0), Direction(2), INFINITY]
    assert str(INFINITY) == "inf" and str(Direction(4)) == "4"
    assert Direction.parse("inf") == INFINITY and Direction.parse("3") == Direction(3)


def test_on_line(gf3):
    for theta in all_directions(gf3):
        assert on_line(gf3, (0, 0), Line(theta, 0))
    assert on_line(gf3, (1, 1), Line(Direction(1), 2))
    assert not on_line(gf3, (1, 1), Line(Direction(1), 0))


def test_line_through(gf3):
    assert line_through(gf3, (0, 0), (0, 1)) == Line(Direction(0), 0)
    assert line_through(gf3, (0, 0), (1, 0)) == Line(INFINITY, 0)
    with pytest.raises(ValueError):
        line_through(gf3, (1, 1), (1, 1))


@pytest.mark.parametrize("p,k", PLANE_FIELDS)
def test_line_labelling_matches_all_lines(p, k):
    spec = make_field(p, k)
    labelled = [frozenset(line_points(spec, ln)) for ln in all_lines(spec)]
    assert len(labelled) == spec.q * (spec.q + 1)
    assert set(labelled) == lines_as_point_sets(spec)
    for ln, pts in zip(all_lines(spec), labelled):
        assert len(pts) == spec.q
        assert all(on_line(spec, w, ln) for w in pts)


@pytest.mark.parametrize("p,k", PLANE_FIELDS)
def test_every_point_on_q_plus_one_lines(p, k):
    spec = make_field(p, k)
    lines = all_lines(spec)
    for a, b in itertools.product(range(spec.q), repeat=2):
        assert sum(on_line(spec, (a, b), ln) for ln in lines) == spec.q + 1


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_two_points_one_line(p, k):
    spec = make_field(p, k)
    lines = all_lines(spec)
    pts = [(a, b) for a in range(spec.q) for b in range(spec.q)]
    for u, w in itertools.combinations(pts, 2):
        through = [ln for ln in lines if on_line(spec, u, ln) and on_line(spec, w, ln)]
        assert through == [line_through(spec, u, w)]


def test_dot_set_examples(square):
    assert dot_set(square, (0, 0)) == {0}
    assert dot_set(square, (1, 1)) == {0, 1, 2}
    assert dot_set(square, (1, 0)) == {0, 1}
    assert dot_set(PointSet(square.spec), (1, 1)) == frozenset()


def test_difference_set_examples():
    gf5 = make_field(5)
    assert list(difference_set(PointSet(gf5, [(1, 2)]))) == [(0, 0)]
    assert set(difference_set(PointSet(gf5, [(0, 0), (1, 2)]))) == {(0, 0), (1, 2), (4, 3)}


def test_directions_determined_examples():
    gf3 = make_field(3)
    assert directions_determined(PointSet(gf3, [(1, 0), (0, 2)])) == {Direction(0), INFINITY}
    assert directions_determined(PointSet(gf3, [(0, 0)])) == frozenset()
    gf2 = make_field(2)
    full = PointSet(gf2, [(0, 1), (1, 0), (1, 1)])
    assert directions_determined(full) == set(all_directions(gf2))


def test_point_set_canonical_order_and_dedup(gf3):
    E = PointSet(gf3, [(2, 1), (0, 2), (2, 1), (0, 0)])
    assert list(E) == [(0, 0), (0, 2), (2, 1)]
    assert (0, 2) in E and Point(1, 1) not in E
    with pytest.raises(ValueError):
        PointSet(gf3, [(1, 1), (1, 1)], strict=True)
    with pytest.raises(ValueError):
        PointSet(gf3, [(3, 0)])
    assert len(PointSet.full_plane(gf3)) == 9


@st.composite
def set_and_vector(draw):
    spec = make_field(*draw(st.sampled_from(PLANE_FIELDS)))
    el = st.integers(0, spec.q - 1)
    pts = draw(st.lists(st.tuples(el, el), max_size=20))
    v = (draw(el), draw(el))
    lam = draw(st.integers(1, spec.q - 1))
    return PointSet(spec, pts), v, lam


@settings(max_examples=200, deadline=None)
@given(set_and_vector())
def test_scaling_keeps_dot_set_size(data):
    E, v, lam = data
    assert len(dot_set(E, scale(E.spec, lam, v))) == len(dot_set(E, v))


@settings(max_examples=100, deadline=None)
@given(set_and_vector())
def test_difference_set_properties(data):
    E, _, _ = data
    D = difference_set(E)
    spec = E.spec
    assert len(D) <= len(E) ** 2
    if len(E):
        assert (0, 0) in D
    assert all((spec.neg(a), spec.neg(b)) in D for a, b in D)
