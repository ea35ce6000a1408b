from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropbetti.exactgeom import (
    EmptyPolyhedronError,
    HPolyhedron,
    RadVal,
    VPolytope,
    affine_dim,
    convex_hull,
    lineality_space,
    lp_feasible,
    minkowski_sum,
    sqfree_decompose,
    volume_r,
)

from oracles import polygon_area

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


# ------------------------------------------------------------------ RadVal


def test_sqfree_decompose():
    assert sqfree_decompose(8) == (2, 2)
    assert sqfree_decompose(1) == (1, 1)
    assert sqfree_decompose(12) == (2, 3)
    with pytest.raises(ValueError):
        sqfree_decompose(0)


def test_radval_basics():
    v = RadVal.from_sqrt(1, 8)
    assert (v.q, v.s) == (2, 2)
    assert v.sq() == 8
    assert v == RadVal.from_sqrt(2, 2)
    assert RadVal(Fraction(0), 1) + v == v
    assert v.scaled(3) == RadVal.from_sqrt(6, 2)


def test_radval_comparisons_with_rationals():
    v = RadVal.from_sqrt(1, 2)  # sqrt(2)
    assert v < 2 and v <= Fraction(3, 2) and not v < 1
    assert RadVal(Fraction(3)) == 3
    with pytest.raises(ValueError):
        _ = v < -1


def test_radval_incompatible_addition():
    with pytest.raises(ValueError):
        RadVal.from_sqrt(1, 2) + RadVal.from_sqrt(1, 3)


# ------------------------------------------------------------- feasibility


def test_lp_feasible_interval():
    res = lp_feasible(HPolyhedron(1, [], [((1,), 0), ((-1,), -1)]))
    assert res.feasible and 0 <= res.point[0] <= 1


def test_lp_feasible_contradiction():
    res = lp_feasible(HPolyhedron(1, [], [((1,), 1), ((-1,), 0)]))
    assert not res.feasible


def test_lp_feasible_diagonal():
    res = lp_feasible(HPolyhedron(2, [((1, -1), 0)], [((1, 0), 0), ((0, 1), 0)]))
    assert res.feasible
    x, y = res.point
    assert x == y and x >= 0


def test_affine_dim_examples():
    assert affine_dim(HPolyhedron(2, [((1, 0), 0)], [])) == 1
    assert affine_dim(HPolyhedron(1, [], [((1,), 1), ((-1,), 0)])) == -1
    assert affine_dim(HPolyhedron(3, [], [])) == 3


# ------------------------------------------------------------------- hulls


def test_convex_hull_examples():
    p = convex_hull([(0, 0), (1, 0), (0, 1), (Fraction(1, 4), Fraction(1, 4))])
    assert set(p.vertices) == {(0, 0), (1, 0), (0, 1)}
    assert convex_hull([(0, 0)]).vertices == ((0, 0),)
    seg = convex_hull([(0, 0), (2, 0), (1, 0)])
    assert set(seg.vertices) == {(0, 0), (2, 0)}


def test_convex_hull_idempotent():
    pts = [(0, 0), (3, 1), (1, 3), (1, 1), (2, 2)]
    p = convex_hull(pts)
    assert convex_hull(p.vertices) == p


def test_minkowski_examples():
    sx = VPolytope.hull([(0, 0), (1, 0)])
    sy = VPolytope.hull([(0, 0), (0, 1)])
    square = minkowski_sum(sx, sy)
    assert set(square.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    p = VPolytope.hull([(0, 0), (2, 1), (1, 3)])
    shifted = minkowski_sum(p, VPolytope.hull([(5, 7)]))
    assert set(shifted.vertices) == {(5, 7), (7, 8), (6, 10)}
    doubled = minkowski_sum(p, p)
    assert set(doubled.vertices) == {(0, 0), (4, 2), (2, 6)}


def test_minkowski_commutative():
    a = VPolytope.hull([(0, 0), (1, 2)])
    b = VPolytope.hull([(0, 0), (2, 0), (0, 2)])
    assert minkowski_sum(a, b) == minkowski_sum(b, a)


# ------------------------------------------------------------------ volume


def test_volume_examples():
    tri = VPolytope.hull([(0, 0), (1, 0), (0, 1)])
    assert volume_r(tri) == RadVal(Fraction(1, 2))
    seg = VPolytope.hull([(0, 0), (1, 1)])
    assert volume_r(seg) == RadVal.from_sqrt(1, 2)
    square = VPolytope.hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert volume_r(square) == RadVal(Fraction(1))
    point = VPolytope.hull([(3, 4)])
    assert volume_r(point) == RadVal(Fraction(1))  # 0-dim volume is 1


def test_volume_full_dim_is_rational_and_scales():
    p = VPolytope.hull([(0, 0), (3, 1), (1, 2), (2, 3)])
    v = volume_r(p)
    assert v.s == 1
    doubled = VPolytope.hull([tuple(2 * c for c in pt) for pt in p.vertices])
    assert volume_r(doubled) == v.scaled(4)  # lambda^r with r = 2


@given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=6))
@settings(deadline=None, max_examples=60)
def test_volume_2d_matches_shoelace(points):
    p = VPolytope.hull(points)
    if p.affine_dim() == 2:
        assert volume_r(p) == RadVal(polygon_area(points))


# --------------------------------------------------------------- polyhedra


def test_lineality_examples():
    basis = lineality_space(HPolyhedron(2, [((1, 0), 0)], []))
    assert len(basis) == 1 and basis[0][0] == 0 and basis[0][1] != 0
    assert lineality_space(HPolyhedron(2, [], [((1, 0), 0), ((0, 1), 0)])) == []
    assert len(lineality_space(HPolyhedron(2, [], []))) == 2
    with pytest.raises(EmptyPolyhedronError):
        lineality_space(HPolyhedron(1, [], [((1,), 1), ((-1,), 0)]))


def test_canonical_identifies_equal_polyhedra():
    a = HPolyhedron(2, [((2, 0), 0)], [((0, 3), 0)])
    b = HPolyhedron(2, [((-1, 0), 0)], [((0, 1), 0), ((0, 2), -5)])
    assert a.canonical() == b.canonical()
    empty = HPolyhedron(1, [], [((1,), 1), ((-1,), 0)])
    assert empty.canonical().empty


def test_contains_and_vertices():
    square = HPolyhedron(
        2, [], [((1, 0), 0), ((-1, 0), -1), ((0, 1), 0), ((0, -1), -1)]
    )
    assert square.contains((Fraction(1, 2), Fraction(1, 2)))
    assert not square.contains((2, 0))
    assert set(square.vertices()) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert square.is_bounded()
    assert not HPolyhedron(2, [((1, 0), 0)], []).is_bounded()


@given(
    st.integers(min_value=1, max_value=3),
    st.data(),
)
@settings(deadline=None, max_examples=60)
def test_feasible_point_satisfies_constraints(n, data):
    anchor = data.draw(st.lists(rationals, min_size=n, max_size=n))
    eqs, ineqs = [], []
    for _ in range(data.draw(st.integers(min_value=0, max_value=2))):
        a = data.draw(st.lists(st.integers(min_value=-2, max_value=2), min_size=n, max_size=n))
        if any(a):
            eqs.append((a, sum(Fraction(c) * x for c, x in zip(a, anchor))))
    for _ in range(data.draw(st.integers(min_value=0, max_value=3))):
        a = data.draw(st.lists(st.integers(min_value=-2, max_value=2), min_size=n, max_size=n))
        if any(a):
            ineqs.append((a, sum(Fraction(c) * x for c, x in zip(a, anchor)) - 1))
    p = HPolyhedron(n, eqs, ineqs)
    x = p.feasible_point()
    assert x is not None
    assert p.contains(x)
