import itertools
import random

import pytest
from hypothesis import given, strategies as st

from greedy_geom.geometry import (
    NEG_INF,
    ColumnIndex,
    Point,
    is_arborally_satisfied_set,
    pairs_satisfied_above,
    rect_satisfied,
)

P, Q = Point(4, 1), Point(6, 3)


def test_fig1_unsatisfied_rectangle():
    assert not rect_satisfied(P, Q, {P, Q})


def test_fig1_satisfied_by_corner():
    assert rect_satisfied(P, Q, {P, Q, Point(4, 3)})


def test_interior_point_satisfies():
    p, q = Point(1, 1), Point(3, 3)
    assert rect_satisfied(p, q, {p, q, Point(2, 2)})


def test_boundary_edge_point_is_witness():
    p, q = Point(1, 1), Point(5, 4)
    assert rect_satisfied(p, q, {p, q, Point(3, 4)})
    assert rect_satisfied(p, q, {p, q, Point(1, 2)})
    assert not rect_satisfied(p, q, {p, q, Point(6, 2)})


@pytest.mark.parametrize("p,q", [(Point(2, 1), Point(2, 5)), (Point(1, 3), Point(4, 3)), (Point(1, 1), Point(1, 1))])
def test_degenerate_pair_rejected(p, q):
    with pytest.raises(ValueError):
        rect_satisfied(p, q, {p, q})


def test_set_examples():
    assert not is_arborally_satisfied_set({P, Q})
    assert is_arborally_satisfied_set({P, Q, Point(4, 3)})
    assert is_arborally_satisfied_set({Point(5, 1)})
    assert is_arborally_satisfied_set(set())


def test_pairs_above_cutoff_examples():
    assert pairs_satisfied_above({Point(2, -1), Point(1, -2)}, 1)
    assert not pairs_satisfied_above({P, Q}, 1)
    # the same unsatisfied pair is ignored once it sits below the cutoff
    assert pairs_satisfied_above({P, Q}, 4)


points = st.builds(Point, st.integers(1, 8), st.integers(-6, 6).filter(bool))


@given(points, points, st.sets(points, max_size=12))
def test_symmetry(p, q, rest):
    if p.key == q.key or p.time == q.time:
        return
    s = rest | {p, q}
    assert rect_satisfied(p, q, s) == rect_satisfied(q, p, s)


@given(points, points, st.sets(points, max_size=10), st.sets(points, max_size=10))
def test_monotone_under_additions(p, q, a, extra):
    if p.key == q.key or p.time == q.time:
        return
    small = a | {p, q}
    if rect_satisfied(p, q, small):
        assert rect_satisfied(p, q, small | extra)


def _double_loop(pts, cutoff=NEG_INF):
    for p, q in itertools.combinations(pts, 2):
        if p.key == q.key or p.time == q.time or max(p.time, q.time) < cutoff:
            continue
        if not rect_satisfied(p, q, pts):
            return False
    return True


@given(st.sets(points, max_size=25), st.integers(-6, 6))
def test_set_check_matches_double_loop(pts, cutoff):
    assert is_arborally_satisfied_set(pts) == _double_loop(pts)
    assert pairs_satisfied_above(pts, cutoff) == _double_loop(pts, cutoff)
    assert pairs_satisfied_above(pts, NEG_INF) == is_arborally_satisfied_set(pts)


def _grid_block(rng, size):
    # Arborally satisfied by construction: a full grid block.
    k = rng.randint(1, 14)
    t = max(1, size // k)
    return {Point(x, y) for x in range(1, k + 1) for y in range(1, t + 1)}


@pytest.mark.parametrize("seed", range(6))
def test_double_loop_agreement_200_points(seed):
    rng = random.Random(seed)
    pts = {Point(rng.randint(1, 40), rng.choice([-1, 1]) * rng.randint(1, 40)) for _ in range(200)}
    assert is_arborally_satisfied_set(pts) == _double_loop(pts)
    grid = _grid_block(rng, 200)
    assert is_arborally_satisfied_set(grid) and _double_loop(grid)
    grid.discard(Point(1, 1))
    grid.discard(Point(2, 2))
    assert is_arborally_satisfied_set(grid) == _double_loop(grid)


@given(st.sets(points, max_size=20), points, points)
def test_column_index_matches_scan(pts, p, q):
    if p.key == q.key or p.time == q.time:
        return
    s = pts | {p, q}
    assert ColumnIndex(s).has_witness(p, q) == rect_satisfied(p, q, s)


def test_large_grid_fallback_agrees(monkeypatch):
    from greedy_geom import geometry

    rng = random.Random(3)
    pts = {Point(rng.randint(1, 30), rng.randint(1, 30)) for _ in range(80)}
    expected = is_arborally_satisfied_set(pts)
    monkeypatch.setattr(geometry, "_GRID_CELL_LIMIT", 0)
    assert is_arborally_satisfied_set(pts) == expected == _double_loop(pts)
