"""Polygon and point-list file formats.

JSON: ``{"vertices": [[x, y], ...]}``. Plain text: one ``x y`` pair per line,
blank lines and ``#`` comments ignored.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Point, Polygon, as_point, make_polygon


def parse_points(text: str) -> list[Point]:
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("vertices", data.get("points"))
            if data is None:
                raise ValueError('expected a "vertices" or "points" key')
        return [as_point(p) for p in data]
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'x y', got {line!r}")
        pts.append(as_point((int(parts[0]), int(parts[1]))))
    return pts


def parse_polygon(text: str) -> Polygon:
    return make_polygon(parse_points(text))


def read_points(path: str | Path) -> list[Point]:
    return parse_points(Path(path).read_text())


def read_polygon(path: str | Path) -> Polygon:
    return parse_polygon(Path(path).read_text())


def polygon_to_dict(P: Polygon) -> dict:
    return {"vertices": P.as_lists()}


def dumps_polygon(P: Polygon) -> str:
    return json.dumps(polygon_to_dict(P))


def dumps_polygon_text(P: Polygon) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in P.vertices)
