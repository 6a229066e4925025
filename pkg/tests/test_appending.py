import pytest
from hypothesis import given, settings

from conftest import polygons
from latpoly.appending import (
    NotPrimitiveError,
    append,
    append_orders,
    best_order_count,
    can_append,
    saturate,
    verify_append_once,
)
from latpoly.bezout import apex_candidates
from latpoly.core import ConvexityError, analyze, make_polygon

BASE5 = make_polygon([(0, 0), (6, -1), (5, 1)])
UNIT_SQUARE = make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
PENTAGON_31 = make_polygon([(1, 0), (4, 2), (4, 3), (1, 4), (0, 1)])
PENTAGON_32 = make_polygon([(0, 0), (2, 1), (2, 2), (0, 3), (-1, 1)])


class TestCanAppend:
    def test_base_triangle_bottom_edge(self):
        d = can_append(BASE5, BASE5.edge_index((0, 0), (6, -1)))
        assert d.ok and d.apex == (5, -1)

    def test_unit_square(self):
        assert not any(can_append(UNIT_SQUARE, i) for i in range(4))

    def test_reasons(self):
        reasons = {can_append(UNIT_SQUARE, i).reason for i in range(4)}
        assert reasons == {"collinear at preceding vertex"}
        T = make_polygon([(0, 0), (2, 1), (-1, 0)])
        assert can_append(T, T.edge_index((0, 0), (2, 1))).reason == "collinear at preceding vertex"

    def test_example_31_octagon_closed(self):
        octagon = saturate(PENTAGON_31).final
        assert not any(can_append(octagon, i) for i in range(octagon.n))
        assert all(apex_candidates(octagon, i) == [] for i in range(octagon.n))


class TestAppend:
    def test_base_triangle(self):
        r = append(BASE5, BASE5.edge_index((0, 0), (6, -1)))
        assert r.after == make_polygon([(0, 0), (5, -1), (6, -1), (5, 1)])
        assert (analyze(r.after).B, analyze(r.after).I) == (4, 5)
        assert r.canonical_used

    def test_explicit_noncanonical_apex(self):
        T = make_polygon([(0, 0), (2, 1), (-1, 0)])
        r = append(T, T.edge_index((0, 0), (2, 1)), (3, 1))
        assert r.after == make_polygon([(0, 0), (3, 1), (2, 1), (-1, 0)])
        a = analyze(r.after)
        assert (a.area2, a.B, a.I) == (2, 4, 0)
        assert not r.canonical_used

    def test_rejects_far_apex(self):
        T = make_polygon([(0, 0), (2, 1), (-1, 0)])
        with pytest.raises(NotPrimitiveError):
            append(T, T.edge_index((0, 0), (2, 1)), (2, 0))

    def test_rejects_infeasible_apex(self):
        T = make_polygon([(0, 0), (2, 1), (-1, 0)])
        with pytest.raises(ConvexityError):
            append(T, T.edge_index((0, 0), (2, 1)), (1, 0))
        with pytest.raises(ConvexityError):
            append(UNIT_SQUARE, 0)

    def test_example_31_three_appends(self):
        P = PENTAGON_31
        assert analyze(P).area2 == 19 and analyze(P).I == 8
        res = saturate(P)
        assert res.count == 3
        a = analyze(res.final)
        assert (a.B, a.I) == (8, 8)

    def test_example_31_figure_order_reachable(self):
        # the figure appends (3,1), (2,4) and (0,2)
        figure = make_polygon([(1, 0), (3, 1), (4, 2), (4, 3), (2, 4), (1, 4), (0, 2), (0, 1)])
        finals = set(append_orders(PENTAGON_31).values())
        assert figure in finals
        assert all(len(path) == 3 for path in append_orders(PENTAGON_31))


class TestSaturate:
    def test_base_triangle(self):
        res = saturate(BASE5)
        assert res.final.vertices == ((0, 0), (5, -1), (6, -1), (6, 0), (5, 1), (4, 1))
        assert res.count == 3
        a = analyze(res.final)
        assert (a.B, a.I) == (6, 5)

    def test_unit_square_unchanged(self):
        res = saturate(UNIT_SQUARE)
        assert res.final == UNIT_SQUARE and res.count == 0

    def test_example_32_order_dependence(self):
        res = saturate(PENTAGON_32)
        # frozen from the ascending sweep
        assert res.count == 2
        assert [r.apex for r in res.reports] == [(-1, 0), (1, 3)]
        assert best_order_count(PENTAGON_32) == (2, 3)

    def test_order_search_limit(self):
        P = make_polygon([(0, 0), (1, 0), (3, 1), (4, 3), (4, 4), (3, 5), (2, 5), (0, 4), (-1, 2)])
        with pytest.raises(ValueError):
            append_orders(P)


class TestVerifyAppendOnce:
    @pytest.mark.parametrize("P", [BASE5, PENTAGON_31, PENTAGON_32])
    def test_no_counterexamples(self, P):
        assert verify_append_once(P) == []

    def test_corpus(self, small_corpus):
        assert [c for P in small_corpus for c in verify_append_once(P)] == []


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_append_invariant(P):
    before = analyze(P)
    for i in range(P.n):
        for cand in apex_candidates(P, i):
            r = append(P, i, cand.w)
            after = analyze(r.after)
            assert after.n == before.n + 1
            assert after.B == before.B + 1
            assert after.I == before.I
            assert after.area2 == before.area2 + 1
            assert make_polygon(r.after.vertices) == r.after


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_can_append_implies_append(P):
    for i in range(P.n):
        if can_append(P, i):
            r = append(P, i)
            assert r.apex == can_append(P, i).apex
            assert analyze(r.after).I == analyze(P).I


@settings(max_examples=150, deadline=None)
@given(polygons)
def test_saturate_idempotent(P):
    once = saturate(P).final
    assert saturate(once).final == once
    assert saturate(once).count == 0
