"""Bounded exhaustive searches and the random polygon corpus.

The collinear search places the k interior points at (1,0)..(k,0). Vertices
then live on the lines y = -1, 0, 1; on y = 0 only (0,0) and (k+1,0) are
possible, and each of y = +-1 carries at most two vertices. A separate
falsifier searches a wider window for vertices with |y| >= 2, so the
pruning is checked rather than assumed.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .core import (
    Point,
    Polygon,
    PolygonError,
    analyze,
    make_polygon,
    orientation,
    strict_hull,
)

log = logging.getLogger(__name__)


class InstabilityError(RuntimeError):
    """Widening the search window changed the answer; the bound is too small."""


def target_interior(k: int) -> tuple[Point, ...]:
    return tuple(Point(j, 0) for j in range(1, k + 1))


def _line_options(y: int, lo: int, hi: int) -> list[tuple[Point, ...]]:
    # Two vertices on an extreme horizontal line span an edge, which is only
    # primitive when they are unit distance apart.
    opts: list[tuple[Point, ...]] = [()]
    opts += [(Point(x, y),) for x in range(lo, hi + 1)]
    opts += [(Point(x, y), Point(x + 1, y)) for x in range(lo, hi)]
    return opts


def _shoelace2(vs: Sequence[Point]) -> int:
    n = len(vs)
    return sum(vs[i].x * vs[(i + 1) % n].y - vs[(i + 1) % n].x * vs[i].y for i in range(n))


def enumerate_collinear(k: int, x_margin: int = 2) -> list[Polygon]:
    """All convex lattice polygons with interior exactly (1,0)..(k,0).

    Vertices on y = +-1 range over ``x in [1 - k*x_margin, k + k*x_margin]``.
    """
    if not isinstance(k, int) or k < 3:
        raise ValueError(f"k must be an integer >= 3, got {k!r}")
    if x_margin < 1:
        raise ValueError("x_margin must be >= 1")
    lo, hi = 1 - k * x_margin, k + k * x_margin
    tops = _line_options(1, lo, hi)
    bottoms = _line_options(-1, lo, hi)
    axis = [(), (Point(0, 0),), (Point(k + 1, 0),), (Point(0, 0), Point(k + 1, 0))]
    want = target_interior(k)

    found: set[tuple[Point, ...]] = set()
    for top, bottom, mid in itertools.product(tops, bottoms, axis):
        pts = top + bottom + mid
        if len(pts) < 3:
            continue
        hull = strict_hull(pts)
        if len(hull) != len(pts):
            continue
        n = len(hull)
        if any(gcd(hull[(i + 1) % n].x - hull[i].x, hull[(i + 1) % n].y - hull[i].y) != 1
               for i in range(n)):
            continue
        # Pick: I = (2A - B + 2) / 2 with B = n; cheap filter before the scan.
        if _shoelace2(hull) - n + 2 != 2 * k:
            continue
        P = make_polygon(hull)
        if analyze(P).interior_pts == want:
            found.add(P.vertices)
    return [Polygon(v) for v in sorted(found)]


@dataclass
class ClassificationReport:
    k: int
    achievable_n: set[int]
    count_per_n: dict[int, int]
    witnesses: dict[int, Polygon]
    search_bounds: dict[str, int]
    polygons: list[Polygon] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "achievable_n": sorted(self.achievable_n),
            "counts": {str(n): c for n, c in sorted(self.count_per_n.items())},
            "witnesses": {str(n): {"vertices": P.as_lists()} for n, P in sorted(self.witnesses.items())},
            "bounds": self.search_bounds,
        }


def classify(k: int, x_margin: int = 2) -> ClassificationReport:
    """Achievable n for k collinear interior points, with a stability check."""
    polys = enumerate_collinear(k, x_margin)
    wider = enumerate_collinear(k, x_margin + 1)
    ns = {P.n for P in polys}
    if ns != {P.n for P in wider}:
        raise InstabilityError(
            f"k={k}: achievable n changed between x_margin {x_margin} and {x_margin + 1}"
        )
    counts: dict[int, int] = {}
    witnesses: dict[int, Polygon] = {}
    for P in polys:
        counts[P.n] = counts.get(P.n, 0) + 1
        witnesses.setdefault(P.n, P)
    return ClassificationReport(
        k=k,
        achievable_n=ns,
        count_per_n=counts,
        witnesses=witnesses,
        search_bounds={
            "x_min": 1 - k * x_margin,
            "x_max": k + k * x_margin,
            "x_margin": x_margin,
            "checked_margin": x_margin + 1,
        },
        polygons=polys,
    )


def corpus(seed: int, box_size: int, count: int) -> list[Polygon]:
    """Deterministic sample of distinct convex lattice polygons in ``[0, box]^2``.

    Random point sets are hulled; hulls with non-primitive edges are dropped.
    """
    if not 2 <= box_size <= 64:
        raise ValueError("box_size must be in 2..64")
    if not 1 <= count <= 100_000:
        raise ValueError("count must be in 1..100000")
    rng = random.Random(seed)
    seen: set[tuple[Point, ...]] = set()
    out: list[Polygon] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError(f"could only draw {len(out)} distinct polygons")
        m = rng.randint(3, 8)
        pts = [(rng.randint(0, box_size), rng.randint(0, box_size)) for _ in range(m)]
        hull = strict_hull(pts)
        if len(hull) < 3:
            continue
        try:
            P = make_polygon(hull)
        except PolygonError:
            continue
        if P.vertices not in seen:
            seen.add(P.vertices)
            out.append(P)
    return out


@dataclass
class InequalityViolation:
    polygon: Polygon
    rule: str

    def to_dict(self) -> dict:
        return {"polygon": {"vertices": self.polygon.as_lists()}, "rule": self.rule}


def inequality_violations(polygons: Iterable[Polygon]) -> list[InequalityViolation]:
    """Polygons breaking B <= 2I - n + 10, I >= n - 5, or the B=5 / B=7 bounds."""
    bad = []
    for P in polygons:
        r = analyze(P)
        if not r.coleman_ok:
            bad.append(InequalityViolation(P, "B <= 2I - n + 10"))
        if r.I < r.n - 5:
            bad.append(InequalityViolation(P, "I >= n - 5"))
        if r.B == 5 and r.I < 1:
            bad.append(InequalityViolation(P, "B = 5 => I >= 1"))
        if r.B == 7 and r.I < 4:
            bad.append(InequalityViolation(P, "B = 7 => I >= 4"))
    return bad


@dataclass(frozen=True)
class StripRegion:
    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def validate(self, k: int) -> None:
        if not (self.x_min < 1 and self.x_max > k and self.y_min <= -2 and self.y_max >= 2):
            raise ValueError(
                f"region {self} must contain x in [0, {k + 1}] and reach |y| >= 2"
            )

    def points(self) -> list[Point]:
        return [
            Point(x, y)
            for y in range(self.y_min, self.y_max + 1)
            for x in range(self.x_min, self.x_max + 1)
        ]

    @classmethod
    def default(cls, k: int) -> StripRegion:
        return cls(-5, k + 7, -4, 4)


def hull_lattice_points(points: Iterable[Sequence[int]]) -> set[Point]:
    """Lattice points in the closed convex hull (edges need not be primitive)."""
    hull = strict_hull(points)
    if len(hull) < 3:
        # Degenerate hull: a point or a segment.
        if len(hull) == 1:
            return {hull[0]}
        (ax, ay), (bx, by) = hull
        g = gcd(bx - ax, by - ay)
        return {Point(ax + (bx - ax) // g * t, ay + (by - ay) // g * t) for t in range(g + 1)}
    xs = [p.x for p in hull]
    ys = [p.y for p in hull]
    n = len(hull)
    return {
        Point(x, y)
        for y in range(min(ys), max(ys) + 1)
        for x in range(min(xs), max(xs) + 1)
        if all(orientation(hull[i], hull[(i + 1) % n], (x, y)) >= 0 for i in range(n))
    }


def search_polygons_with_interior(
    interior: Sequence[Point], required: Point, pool: Sequence[Point]
) -> Polygon | None:
    """First polygon with vertex ``required``, other vertices from ``pool``,
    and interior lattice set exactly ``interior``.

    Backtracking over vertex subsets. Growing the vertex set only grows the
    hull, so a lattice point that is neither a chosen vertex nor in
    ``interior`` can never disappear, and the branch is cut.
    """
    want = frozenset(interior)
    base = list(interior) + [required]
    pool = sorted(set(pool) - want - {required})

    def admissible(chosen: list[Point]) -> bool:
        verts = set(chosen) | {required}
        inside = hull_lattice_points(base + chosen)
        if not inside <= want | verts:
            return False
        hull = set(strict_hull(base + chosen))
        return verts <= hull

    def done(chosen: list[Point]) -> Polygon | None:
        verts = chosen + [required]
        if len(verts) < 3:
            return None
        try:
            P = make_polygon(strict_hull(verts))
        except PolygonError:
            return None
        if P.n == len(verts) and frozenset(analyze(P).interior_pts) == want:
            return P
        return None

    singles = [u for u in pool if admissible([u])]

    def walk(start: int, chosen: list[Point]) -> Polygon | None:
        hit = done(chosen)
        if hit is not None:
            return hit
        for j in range(start, len(singles)):
            nxt = chosen + [singles[j]]
            if admissible(nxt):
                hit = walk(j + 1, nxt)
                if hit is not None:
                    return hit
        return None

    return walk(0, [])


@dataclass
class StripSearchResult:
    k: int
    region: StripRegion
    candidates_checked: int
    survivors: list[Point]
    counterexample: Polygon | None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "region": vars(self.region),
            "candidates_checked": self.candidates_checked,
            "survivors": [list(p) for p in self.survivors],
            "counterexample": None
            if self.counterexample is None
            else {"vertices": self.counterexample.as_lists()},
        }


def strip_violation_search(k: int, region: StripRegion | None = None) -> StripSearchResult:
    """Look for a polygon with interior exactly (1,0)..(k,0) and a vertex at |y| >= 2.

    A vertex v forces conv{v, (1,0), (k,0)} into the polygon, so any other
    lattice point in that triangle refutes v outright. Vertices that survive
    this test get a full backtracking search over the region.
    """
    if not isinstance(k, int) or k < 3:
        raise ValueError(f"k must be an integer >= 3, got {k!r}")
    region = region or StripRegion.default(k)
    region.validate(k)
    S = list(target_interior(k))
    allowed = set(S)

    survivors = []
    checked = 0
    for v in region.points():
        if abs(v.y) < 2:
            continue
        checked += 1
        if hull_lattice_points(S + [v]) <= allowed | {v}:
            survivors.append(v)
    log.debug("k=%d: %d of %d far vertices survive the triangle test", k, len(survivors), checked)

    pool = region.points()
    for v in survivors:
        hit = search_polygons_with_interior(S, v, pool)
        if hit is not None:
            return StripSearchResult(k, region, checked, survivors, hit)
    return StripSearchResult(k, region, checked, survivors, None)
