"""Appending primitive triangles to polygon edges, and saturation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bezout import apex_candidates, canonical_apex, on_apex_line
from .core import ConvexityError, Point, Polygon, as_point, make_polygon, orientation


class NotPrimitiveError(ValueError):
    """The requested apex is not at minimal distance outside the edge."""


@dataclass(frozen=True)
class AppendDecision:
    ok: bool
    apex: Point
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AppendReport:
    before: Polygon
    after: Polygon
    edge_index: int
    apex: Point
    canonical_used: bool

    def to_dict(self) -> dict:
        return {
            "edge": self.edge_index,
            "apex": [self.apex.x, self.apex.y],
            "canonical": self.canonical_used,
            "before": {"vertices": self.before.as_lists()},
            "after": {"vertices": self.after.as_lists()},
        }


def can_append(P: Polygon, i: int) -> AppendDecision:
    """Decide whether the canonical apex of edge ``i`` can be inserted."""
    u, v = P.edge(i)
    w = canonical_apex(u, v)
    s = orientation(P.vertex(i - 1), u, w)
    if s == 0:
        return AppendDecision(False, w, "collinear at preceding vertex")
    if s < 0:
        return AppendDecision(False, w, "reflex at preceding vertex")
    if orientation(w, v, P.vertex(i + 2)) <= 0:
        return AppendDecision(False, w, "collinear/reflex at following vertex")
    return AppendDecision(True, w)


def _insert(P: Polygon, i: int, w: Point) -> Polygon:
    vs = list(P.vertices)
    vs.insert(i + 1, w)
    return make_polygon(vs)


def append(P: Polygon, i: int, apex: Sequence[int] | None = None) -> AppendReport:
    u, v = P.edge(i)
    canonical = canonical_apex(u, v)
    if apex is None:
        decision = can_append(P, i)
        if not decision:
            raise ConvexityError(f"cannot append to edge {i}: {decision.reason}")
        w = canonical
    else:
        w = as_point(apex)
        if not on_apex_line(u, v, w):
            raise NotPrimitiveError(
                f"{tuple(w)} is not an exterior lattice point at minimal distance from edge {i}"
            )
        if not (orientation(P.vertex(i - 1), u, w) == 1 and orientation(w, v, P.vertex(i + 2)) == 1):
            raise ConvexityError(f"apex {tuple(w)} breaks convexity on edge {i}")
    return AppendReport(P, _insert(P, i, w), i, w, w == canonical)


@dataclass
class SaturationResult:
    final: Polygon
    reports: list[AppendReport] = field(default_factory=list)
    # appends that landed on an edge created by an earlier append
    nested: list[AppendReport] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.reports)


def saturate(P: Polygon) -> SaturationResult:
    """Append canonical apexes in ascending-edge sweeps until nothing changes.

    Each sweep visits the edges of the polygon as it stood when the sweep
    began; edges created during a sweep are first visited in the next one.
    """
    result = SaturationResult(P)
    created: set[tuple[Point, Point]] = set()
    changed = True
    while changed:
        changed = False
        for u, v in result.final.edges():
            i = result.final.edge_index(u, v)
            if i is None or not can_append(result.final, i):
                continue
            report = append(result.final, i)
            result.reports.append(report)
            if (u, v) in created:
                result.nested.append(report)
            created |= {(u, report.apex), (report.apex, v)}
            result.final = report.after
            changed = True
    return result


def append_orders(P: Polygon, max_n: int = 8) -> dict[tuple[int, ...], Polygon]:
    """Every maximal sequence of canonical appends, keyed by edge-index path.

    Exhaustive over all orders, so only run for small inputs.
    """
    if P.n > max_n:
        raise ValueError(f"exhaustive order search limited to n <= {max_n}")
    out: dict[tuple[int, ...], Polygon] = {}

    def walk(Q: Polygon, path: tuple[int, ...]) -> None:
        moves = [i for i in range(Q.n) if can_append(Q, i)]
        if not moves:
            out[path] = Q
            return
        for i in moves:
            walk(append(Q, i).after, path + (i,))

    walk(P, ())
    return out


@dataclass(frozen=True)
class AppendOnceCounterexample:
    polygon: Polygon
    edge_index: int
    after: Polygon
    new_edge: tuple[Point, Point]
    canonical_fires: bool
    candidates: tuple

    def to_dict(self) -> dict:
        return {
            "polygon": {"vertices": self.polygon.as_lists()},
            "edge": self.edge_index,
            "after": {"vertices": self.after.as_lists()},
            "new_edge": [list(self.new_edge[0]), list(self.new_edge[1])],
            "canonical_fires": self.canonical_fires,
            "candidates": [c.to_dict() for c in self.candidates],
        }


def verify_append_once(P: Polygon) -> list[AppendOnceCounterexample]:
    """Check that no edge created by a canonical append admits another append.

    Both the canonical apex and every generalized candidate are tested on
    the two new edges. Returns the counterexamples; empty means the claim
    held for every appendable edge of ``P``.
    """
    bad = []
    for i in range(P.n):
        if not can_append(P, i):
            continue
        report = append(P, i)
        Q = report.after
        u, v = P.edge(i)
        for e in ((u, report.apex), (report.apex, v)):
            j = Q.edge_index(*e)
            fires = bool(can_append(Q, j))
            cands = tuple(apex_candidates(Q, j))
            if fires or cands:
                bad.append(AppendOnceCounterexample(P, i, Q, e, fires, cands))
    return bad


def best_order_count(P: Polygon, max_n: int = 8) -> tuple[int, int]:
    """Fewest and most appends over all orders (exhaustive, small n only)."""
    lengths = [len(path) for path in append_orders(P, max_n)]
    return min(lengths), max(lengths)


__all__ = [
    "AppendDecision",
    "AppendOnceCounterexample",
    "AppendReport",
    "NotPrimitiveError",
    "SaturationResult",
    "append",
    "append_orders",
    "best_order_count",
    "can_append",
    "saturate",
    "verify_append_once",
]
