"""Explicit polygon families with a prescribed number of interior points.

``collinear_ngon`` gives n-gons (n = 3..6) whose k interior points are
(1,0)..(k,0); ``noncollinear_ngon`` gives n-gons (n = 4..6) with k interior
points not on a line. Appended apexes come from the Bezout construction at
runtime, never from hard-coded coordinates.
"""

from __future__ import annotations

from .appending import append, can_append
from .core import Polygon, make_polygon


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 3:
        raise ValueError(f"k must be an integer >= 3, got {k!r}")


def _append_edge(P: Polygon, u, v) -> Polygon:
    i = P.edge_index(u, v)
    if i is None:
        raise RuntimeError(f"edge {u}->{v} missing from {P.vertices}")
    return append(P, i).after


def base_collinear_triangle(k: int) -> Polygon:
    _check_k(k)
    return make_polygon([(0, 0), (k + 1, -1), (k, 1)])


def collinear_ngon(k: int, n: int) -> Polygon:
    _check_k(k)
    if n not in (3, 4, 5, 6):
        raise ValueError(f"collinear interior points only allow n in 3..6, got {n}")
    P = base_collinear_triangle(k)
    # appended in this order: bottom edge, right edge, top edge
    edges = [((0, 0), (k + 1, -1)), ((k + 1, -1), (k, 1)), ((k, 1), (0, 0))]
    for u, v in edges[: n - 3]:
        P = _append_edge(P, u, v)
    return P


def pk(k: int) -> Polygon:
    """The quadrilateral with k non-collinear interior points."""
    _check_k(k)
    if k % 2 == 0:
        verts = [(0, 0), (k // 2, -1), (k // 2 + 1, 1), (1, 2)]
    else:
        verts = [(0, 0), ((k + 1) // 2 + 1, -1), ((k + 1) // 2, 1), (1, 2)]
    return make_polygon(verts)


def noncollinear_ngon(k: int, n: int) -> Polygon:
    _check_k(k)
    if n not in (4, 5, 6):
        raise ValueError(f"noncollinear construction covers n in 4..6, got {n}")
    P = pk(k)
    _, bottom_right, top_right, top = P.vertices
    if n >= 5:
        P = _append_edge(P, (0, 0), bottom_right)
    if n >= 6:
        i = P.edge_index(top_right, top)
        if not can_append(P, i):
            # k = 3: the top-right edge never admits an append; use the
            # first edge that does.
            i = next((j for j in range(P.n) if can_append(P, j)), None)
            if i is None:
                raise RuntimeError(f"no appendable edge left on {P.vertices}")
        P = append(P, i).after
    return P


def construct(kind: str, k: int, n: int) -> Polygon:
    if kind == "collinear":
        return collinear_ngon(k, n)
    if kind == "noncollinear":
        return noncollinear_ngon(k, n)
    raise ValueError(f"unknown construction {kind!r}")
