"""Exact integer primitives for convex lattice polygons.

Everything here works on Python ints; there is no floating point in any
predicate. Coordinates are bounded by ``COORD_LIMIT`` so that every cross
product and shoelace sum stays well inside signed 64-bit range.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

COORD_LIMIT = 2**20


class PolygonError(ValueError):
    """Base class for rejected polygon input."""


class ConvexityError(PolygonError):
    pass


class VisibilityError(PolygonError):
    """An edge contains lattice points strictly between its endpoints."""

    def __init__(self, message: str, edge: tuple[Point, Point] | None = None):
        super().__init__(message)
        self.edge = edge


class DuplicateVertexError(PolygonError):
    pass


class CoordinateRangeError(PolygonError):
    pass


class DegenerateSegmentError(ValueError):
    pass


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])


# Vectors and points share a representation; the alias documents intent.
Vector = Point


def as_point(p: Sequence[int]) -> Point:
    """Coerce a pair to a range-checked ``Point``."""
    x, y = p
    if isinstance(x, bool) or isinstance(y, bool):
        raise TypeError("coordinates must be integers")
    if int(x) != x or int(y) != y:
        raise TypeError(f"non-integer coordinates: {p!r}")
    x, y = int(x), int(y)
    if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
        raise CoordinateRangeError(f"coordinate out of range: ({x}, {y})")
    return Point(x, y)


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1]


def orientation(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """Sign of the turn a -> b -> c: +1 left, 0 collinear, -1 right."""
    z = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
    return (z > 0) - (z < 0)


def is_primitive(v: Sequence[int]) -> bool:
    return gcd(v[0], v[1]) == 1


def segment_lattice_count(v: Sequence[int], w: Sequence[int]) -> int:
    """Number of lattice points strictly between ``v`` and ``w``."""
    dx, dy = w[0] - v[0], w[1] - v[1]
    if dx == 0 and dy == 0:
        raise DegenerateSegmentError(f"degenerate segment at {tuple(v)}")
    return gcd(dx, dy) - 1


def visible(v: Sequence[int], w: Sequence[int]) -> bool:
    return segment_lattice_count(v, w) == 0


def strict_hull(points: Iterable[Sequence[int]]) -> list[Point]:
    """Vertices of the convex hull, CCW from the lexicographic minimum.

    Collinear boundary points are dropped (monotone chain).
    """
    pts = sorted(set(Point(p[0], p[1]) for p in points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class Polygon:
    """Strictly convex lattice polygon with primitive edges, CCW and canonical.

    Build through :func:`make_polygon`; the constructor does not validate.
    """

    vertices: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def edge(self, i: int) -> tuple[Point, Point]:
        n = len(self.vertices)
        if not 0 <= i < n:
            raise IndexError(f"edge index {i} out of range for {n}-gon")
        return self.vertices[i], self.vertices[(i + 1) % n]

    def edges(self) -> list[tuple[Point, Point]]:
        return [self.edge(i) for i in range(len(self.vertices))]

    def edge_index(self, u: Sequence[int], v: Sequence[int]) -> int | None:
        """Index of the directed edge u -> v, or None if absent."""
        u, v = Point(*u), Point(*v)
        try:
            i = self.vertices.index(u)
        except ValueError:
            return None
        return i if self.vertex(i + 1) == v else None

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def as_lists(self) -> list[list[int]]:
        return [[p.x, p.y] for p in self.vertices]


def make_polygon(points: Iterable[Sequence[int]]) -> Polygon:
    """Validate ``points`` as a convex lattice polygon and canonicalize it.

    Accepts either orientation and any starting vertex. The result is CCW
    and starts at the lexicographically smallest vertex.
    """
    pts = [as_point(p) for p in points]
    if len(pts) < 3:
        raise ConvexityError(f"need at least 3 vertices, got {len(pts)}")
    if len(set(pts)) != len(pts):
        seen = set()
        dup = next(p for p in pts if p in seen or seen.add(p))
        raise DuplicateVertexError(f"duplicate vertex {tuple(dup)}")

    n = len(pts)
    turns = {orientation(pts[i - 1], pts[i], pts[(i + 1) % n]) for i in range(n)}
    if 0 in turns:
        raise ConvexityError("three consecutive vertices are collinear")
    if len(turns) != 1:
        raise ConvexityError("vertex list is not convex")
    if turns == {-1}:
        pts.reverse()

    hull = strict_hull(pts)
    if len(hull) != n:
        raise ConvexityError("vertex list is not convex")
    # A self-intersecting star has all turns the same sign but the wrong order.
    start = pts.index(hull[0])
    if pts[start:] + pts[:start] != hull:
        raise ConvexityError("vertex order does not trace a convex polygon")

    for i in range(n):
        u, v = hull[i], hull[(i + 1) % n]
        if gcd(v.x - u.x, v.y - u.y) != 1:
            raise VisibilityError(
                f"edge {tuple(u)}-{tuple(v)} is not primitive", edge=(u, v)
            )
    return Polygon(tuple(hull))


def area2(P: Polygon) -> int:
    """Twice the area, by the shoelace sum."""
    vs = P.vertices
    n = len(vs)
    return sum(vs[i].x * vs[(i + 1) % n].y - vs[(i + 1) % n].x * vs[i].y for i in range(n))


def boundary_count(P: Polygon) -> int:
    return sum(gcd(v.x - u.x, v.y - u.y) for u, v in P.edges())


def _edge_forms(P: Polygon) -> list[tuple[int, int, int]]:
    # a*x + b*y + c > 0 exactly when (x, y) is strictly left of the edge.
    forms = []
    for u, v in P.edges():
        a = -(v.y - u.y)
        b = v.x - u.x
        forms.append((a, b, -(a * u.x + b * u.y)))
    return forms


def interior_points(P: Polygon) -> list[Point]:
    """All lattice points strictly inside ``P``, by bounding-box scan."""
    forms = _edge_forms(P)
    x0, x1, y0, y1 = P.bbox()
    out = []
    for y in range(y0 + 1, y1):
        row = [(a, b * y + c) for a, b, c in forms]
        for x in range(x0 + 1, x1):
            for a, r in row:
                if a * x + r <= 0:
                    break
            else:
                out.append(Point(x, y))
    return out


def closed_points(P: Polygon) -> list[Point]:
    """All lattice points in ``P`` including its boundary."""
    forms = _edge_forms(P)
    x0, x1, y0, y1 = P.bbox()
    return [
        Point(x, y)
        for y in range(y0, y1 + 1)
        for x in range(x0, x1 + 1)
        if all(a * x + b * y + c >= 0 for a, b, c in forms)
    ]


def points_collinear(points: Sequence[Sequence[int]]) -> bool:
    """True when all points lie on one line; 0, 1 or 2 points always do."""
    if len(points) <= 2:
        return True
    a = points[0]
    b = next((p for p in points if tuple(p) != tuple(a)), None)
    if b is None:
        return True
    return all(orientation(a, b, p) == 0 for p in points)


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    B: int
    I: int
    area2: int
    interior_pts: tuple[Point, ...]
    interior_collinear: bool
    pick_ok: bool
    coleman_ok: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "B": self.B,
            "I": self.I,
            "area2": self.area2,
            "interior_pts": [[p.x, p.y] for p in self.interior_pts],
            "interior_collinear": self.interior_collinear,
            "pick_ok": self.pick_ok,
            "coleman_ok": self.coleman_ok,
        }


def analyze(P: Polygon) -> AnalysisReport:
    """Count boundary and interior points and check Pick and Coleman.

    B, I and the area come from three independent computations (gcd sum,
    point scan, shoelace), so ``pick_ok`` is a genuine cross-check.
    """
    B = boundary_count(P)
    pts = interior_points(P)
    I = len(pts)
    a2 = area2(P)
    n = P.n
    return AnalysisReport(
        n=n,
        B=B,
        I=I,
        area2=a2,
        interior_pts=tuple(pts),
        interior_collinear=points_collinear(pts),
        pick_ok=a2 == B + 2 * I - 2,
        coleman_ok=B <= 2 * I - n + 10,
    )
