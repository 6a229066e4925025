from fractions import Fraction
from math import ceil, floor

import pytest
from hypothesis import given, settings

from conftest import polygons
from latpoly.core import (
    COORD_LIMIT,
    ConvexityError,
    CoordinateRangeError,
    DegenerateSegmentError,
    DuplicateVertexError,
    Point,
    VisibilityError,
    analyze,
    area2,
    interior_points,
    make_polygon,
    orientation,
    points_collinear,
    segment_lattice_count,
)


def segment_points_brute(v, w):
    """Lattice points strictly inside segment v-w, by scanning its bounding box."""
    (x1, y1), (x2, y2) = v, w
    out = []
    for x in range(min(x1, x2), max(x1, x2) + 1):
        for y in range(min(y1, y2), max(y1, y2) + 1):
            if (x, y) in (tuple(v), tuple(w)):
                continue
            if (x2 - x1) * (y - y1) == (y2 - y1) * (x - x1):
                out.append((x, y))
    return out


def interior_by_rows(P):
    """Interior lattice points from exact row crossings (independent of edge tests)."""
    vs = P.vertices
    n = len(vs)
    ys = [p.y for p in vs]
    out = []
    for y in range(min(ys) + 1, max(ys)):
        xs = []
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if (a.y - y) * (b.y - y) < 0 or (a.y == y) != (b.y == y):
                if a.y == b.y:
                    continue
                xs.append(a.x + Fraction((y - a.y) * (b.x - a.x), b.y - a.y))
        lo, hi = min(xs), max(xs)
        for x in range(floor(lo) + 1, ceil(hi)):
            out.append(Point(x, y))
    return out


class TestOrientation:
    @pytest.mark.parametrize(
        "a,b,c,expected",
        [((0, 0), (1, 0), (1, 1), 1), ((0, 0), (1, 1), (2, 2), 0), ((0, 0), (1, 0), (2, -1), -1)],
    )
    def test_examples(self, a, b, c, expected):
        assert orientation(a, b, c) == expected

    def test_coincident_points(self):
        assert orientation((3, 4), (3, 4), (5, 6)) == 0


class TestSegmentLatticeCount:
    @pytest.mark.parametrize("v,w,expected", [((0, 0), (3, 2), 0), ((0, 0), (4, 6), 1), ((0, 0), (3, 0), 2)])
    def test_examples(self, v, w, expected):
        assert segment_lattice_count(v, w) == expected

    def test_enumeration_oracle(self):
        assert segment_points_brute((0, 0), (4, 6)) == [(2, 3)]
        assert segment_points_brute((0, 0), (3, 0)) == [(1, 0), (2, 0)]
        for v in [(0, 0), (2, -3)]:
            for dx in range(-6, 7):
                for dy in range(-6, 7):
                    if dx or dy:
                        w = (v[0] + dx, v[1] + dy)
                        assert segment_lattice_count(v, w) == len(segment_points_brute(v, w))

    def test_degenerate(self):
        with pytest.raises(DegenerateSegmentError):
            segment_lattice_count((1, 1), (1, 1))


class TestMakePolygon:
    def test_unit_triangle(self):
        P = make_polygon([(0, 1), (0, 0), (1, 0)])
        assert P.vertices == ((0, 0), (1, 0), (0, 1))

    def test_clockwise_input_is_reoriented(self):
        P = make_polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
        assert P.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))

    def test_non_primitive_edge(self):
        with pytest.raises(VisibilityError) as exc:
            make_polygon([(0, 0), (2, 0), (0, 2)])
        assert set(exc.value.edge) == {(0, 0), (2, 0)}

    def test_paper_base_triangle(self):
        assert make_polygon([(0, 0), (6, -1), (5, 1)]).vertices == ((0, 0), (6, -1), (5, 1))

    def test_collinear_triple(self):
        with pytest.raises(ConvexityError):
            make_polygon([(0, 0), (1, 0), (2, 0), (1, 1)])

    def test_reflex(self):
        with pytest.raises(ConvexityError):
            make_polygon([(0, 0), (2, 1), (1, 1), (1, 2)])

    def test_star_order(self):
        # all left turns, but winds twice
        pts = [(0, 0), (2, -1), (4, 0), (4, 2), (2, 3), (0, 2)]
        star = [pts[i] for i in (0, 2, 4, 1, 3, 5)]
        with pytest.raises(ConvexityError):
            make_polygon(star)

    def test_duplicate(self):
        with pytest.raises(DuplicateVertexError):
            make_polygon([(0, 0), (1, 0), (0, 1), (0, 0)])

    def test_range(self):
        with pytest.raises(CoordinateRangeError):
            make_polygon([(0, 0), (COORD_LIMIT + 1, 0), (0, 1)])

    def test_too_few(self):
        with pytest.raises(ConvexityError):
            make_polygon([(0, 0), (1, 0)])


class TestArea:
    def test_examples(self):
        assert area2(make_polygon([(0, 0), (1, 0), (0, 1)])) == 1
        assert area2(make_polygon([(0, 0), (6, -1), (5, 1)])) == 11
        assert area2(make_polygon([(0, 0), (3, -1), (4, 1), (1, 2)])) == 14


class TestAnalyze:
    def test_base_triangle(self):
        r = analyze(make_polygon([(0, 0), (6, -1), (5, 1)]))
        assert (r.B, r.I) == (3, 5)
        assert r.interior_pts == tuple(Point(x, 0) for x in range(1, 6))
        assert r.interior_collinear

    def test_p6(self):
        r = analyze(make_polygon([(0, 0), (3, -1), (4, 1), (1, 2)]))
        assert (r.B, r.I) == (4, 6)
        assert set(r.interior_pts) == {(1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)}
        assert not r.interior_collinear

    def test_unit_triangle(self):
        r = analyze(make_polygon([(0, 0), (1, 0), (0, 1)]))
        assert (r.B, r.I, r.pick_ok) == (3, 0, True)

    def test_collinear_small_sets(self):
        assert points_collinear([])
        assert points_collinear([(1, 1)])
        assert points_collinear([(1, 1), (5, -2)])
        assert not points_collinear([(0, 0), (1, 0), (0, 1)])


@settings(max_examples=300, deadline=None)
@given(polygons)
def test_pick_identity(P):
    r = analyze(P)
    assert r.B == P.n
    assert r.pick_ok
    assert r.area2 == r.B + 2 * r.I - 2


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_interior_matches_row_oracle(P):
    assert sorted(interior_points(P)) == sorted(interior_by_rows(P))


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_membership_agrees_with_orientation(P):
    inside = set(analyze(P).interior_pts)
    x0, x1, y0, y1 = P.bbox()
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            strict = all(orientation(u, v, (x, y)) == 1 for u, v in P.edges())
            assert ((x, y) in inside) == strict


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_primitive_triangle_criterion(P):
    if P.n == 3:
        r = analyze(P)
        assert (r.I == 0) == (r.area2 == 1)


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_canonical_form_rotation_invariant(P):
    vs = list(P.vertices)
    for s in range(len(vs)):
        rot = vs[s:] + vs[:s]
        assert make_polygon(rot) == P
        assert make_polygon(rot[::-1]) == P
