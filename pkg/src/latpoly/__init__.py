"""Exact-arithmetic toolkit for convex lattice polygons."""

from .affine import AffineMap, apply_map, invert_map, normalize_collinear
from .appending import append, can_append, saturate, verify_append_once
from .bezout import apex_candidates, canonical_apex, extended_gcd
from .constructions import base_collinear_triangle, collinear_ngon, noncollinear_ngon, pk
from .core import (
    AnalysisReport,
    Point,
    Polygon,
    analyze,
    area2,
    make_polygon,
    orientation,
    segment_lattice_count,
)
from .enumeration import classify, corpus, enumerate_collinear, strip_violation_search

__version__ = "0.1.0"
