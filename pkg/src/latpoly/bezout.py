"""Bezout coefficients and the closest exterior lattice point to an edge.

For a CCW polygon the exterior of the edge u -> v (direction d) is its right
side. Lattice points w with ``cross(d, w - u) == -1`` are exactly the
exterior lattice points at the minimal nonzero distance from the edge line,
and each of them is the apex of a primitive triangle on that edge. They form
the arithmetic progression ``w0 + t*d``; the canonical apex is the unique
member whose projection falls in ``[0, |d|^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Point,
    Polygon,
    VisibilityError,
    as_point,
    cross,
    dot,
    orientation,
)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) > 0``."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def canonical_apex(u: Sequence[int], v: Sequence[int]) -> Point:
    """Canonical apex of the primitive triangle appendable to edge u -> v."""
    u, v = Point(*u), Point(*v)
    p, q = v.x - u.x, v.y - u.y
    if p == 0 and q == 0:
        raise VisibilityError(f"degenerate edge at {tuple(u)}")
    g, s, r = extended_gcd(p, q)
    if g != 1:
        raise VisibilityError(f"edge {tuple(u)}-{tuple(v)} is not primitive", edge=(u, v))
    # p*s + q*r == 1, so (x, y) = (r, -s) has p*y - q*x == -1.
    x, y = r, -s
    t = -((p * x + q * y) // (p * p + q * q))
    return Point(u.x + x + t * p, u.y + y + t * q)


def lemma_apex(p: int, q: int) -> Point:
    """Apex in the standard frame by the case split on ``-b'/a'`` vs ``q/p``.

    Only defined for coprime ``p > q > 1``. Picks the Bezout pair with
    ``a' > 0`` minimal and ``a'q + b'p = +-1``, then either keeps
    ``(a', -b')`` or reflects it to ``(p - a', q + b')``. Kept as an
    independent cross-check of :func:`canonical_apex`.
    """
    if not (p > q > 1):
        raise ValueError("lemma_apex needs p > q > 1")
    g, a0, b0 = extended_gcd(q, p)
    if g != 1:
        raise ValueError("p and q must be coprime")
    # Solutions of a'q + b'p = +1 are a0 + j*p; of = -1 are -a0 + j*p.
    best = None
    for sign in (1, -1):
        a1 = (sign * a0) % p
        if a1 == 0:
            continue
        b1 = (sign - a1 * q) // p
        if best is None or a1 < best[0]:
            best = (a1, b1)
    a1, b1 = best
    # -b'/a' < q/p  <=>  -b'*p < q*a'   (a' > 0, p > 0)
    if -b1 * p < q * a1:
        return Point(a1, -b1)
    return Point(p - a1, q + b1)


@dataclass(frozen=True)
class ApexCandidate:
    w: Point
    edge_index: int
    offset: int
    canonical: bool
    feasible: bool

    def to_dict(self) -> dict:
        return {
            "apex": [self.w.x, self.w.y],
            "edge": self.edge_index,
            "offset": self.offset,
            "canonical": self.canonical,
            "feasible": self.feasible,
        }


def insertion_feasible(P: Polygon, i: int, w: Sequence[int]) -> bool:
    """Whether inserting ``w`` after vertex ``i`` keeps ``P`` strictly convex.

    Only the turns at the two edge endpoints can fail; the turn at ``w``
    itself is a left turn for every point right of the edge.
    """
    prev, u, v, nxt = P.vertex(i - 1), P.vertex(i), P.vertex(i + 1), P.vertex(i + 2)
    return (
        orientation(prev, u, w) == 1
        and orientation(u, w, v) == 1
        and orientation(w, v, nxt) == 1
    )


def feasible_offsets(P: Polygon, i: int) -> range:
    """Offsets t for which ``canonical + t*d`` can be inserted on edge ``i``.

    Each endpoint turn is linear in t with a fixed-sign slope, so the
    feasible set is an integer interval, computed here in closed form.
    """
    u, v = P.edge(i)
    prev, nxt = P.vertex(i - 1), P.vertex(i + 2)
    d = v - u
    w0 = canonical_apex(u, v)
    e_prev, e_next = u - prev, nxt - v
    # turn at u: cross(e_prev, w0 - u) + t*cross(e_prev, d) > 0
    c0, A = cross(e_prev, w0 - u), cross(e_prev, d)
    # turn at v: cross(v - w0, e_next) - t*cross(d, e_next) > 0
    c1, B = cross(v - w0, e_next), cross(d, e_next)
    lo = (-c0) // A + 1
    hi = (c1 - 1) // B
    return range(lo, hi + 1)


def apex_candidates(P: Polygon, i: int, include_canonical: bool = False) -> list[ApexCandidate]:
    """Feasible apexes on the minimal-distance exterior line of edge ``i``.

    With ``include_canonical`` the canonical apex is reported too, tagged
    ``feasible=False`` when it cannot be inserted.
    """
    u, v = P.edge(i)
    d = v - u
    w0 = canonical_apex(u, v)
    offsets = set(feasible_offsets(P, i))
    if include_canonical:
        offsets.add(0)
    out = []
    for t in sorted(offsets):
        w = as_point((w0.x + t * d.x, w0.y + t * d.y))
        out.append(ApexCandidate(w, i, t, t == 0, insertion_feasible(P, i, w)))
    return out


def on_apex_line(u: Sequence[int], v: Sequence[int], w: Sequence[int]) -> bool:
    """True when ``w`` is an exterior lattice point at minimal distance."""
    d = (v[0] - u[0], v[1] - u[1])
    return cross(d, (w[0] - u[0], w[1] - u[1])) == -1


def in_canonical_strip(u: Sequence[int], v: Sequence[int], w: Sequence[int]) -> bool:
    d = (v[0] - u[0], v[1] - u[1])
    return 0 <= dot(d, (w[0] - u[0], w[1] - u[1])) < dot(d, d)
