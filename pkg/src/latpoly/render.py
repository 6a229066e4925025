"""SVG and TikZ figures of lattice polygons.

Output is plain text built deterministically from the vertex lists, so equal
inputs give byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Point, Polygon, interior_points


@dataclass(frozen=True)
class RenderOptions:
    format: str = "svg"
    grid: bool = True
    highlight_interior: bool = True
    overlay: Polygon | None = None
    scale: int = 40
    stroke: str = "red"
    overlay_stroke: str = "blue"

    def __post_init__(self):
        if self.format not in ("svg", "tikz"):
            raise ValueError(f"unknown format {self.format!r}")
        if not isinstance(self.scale, int) or self.scale < 1:
            raise ValueError("scale must be a positive integer")


def _bounds(P: Polygon, overlay: Polygon | None) -> tuple[int, int, int, int]:
    pts = list(P.vertices) + (list(overlay.vertices) if overlay else [])
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1


def render_svg(P: Polygon, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    s = opts.scale
    x0, x1, y0, y1 = _bounds(P, opts.overlay)

    # y is flipped: lattice (x, y) -> (x, -y) in user units.
    def xy(p: Point) -> str:
        return f"{p.x * s},{-p.y * s}"

    w, h = (x1 - x0) * s, (y1 - y0) * s
    r = max(1, s // 10)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="{x0 * s} {-y1 * s} {w} {h}">',
    ]
    if opts.grid:
        lines.append('<g class="grid" fill="#999999">')
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                lines.append(f'<circle cx="{x * s}" cy="{-y * s}" r="{max(1, r // 2)}"/>')
        lines.append("</g>")
    if opts.overlay is not None:
        pts = " ".join(xy(p) for p in opts.overlay.vertices)
        lines.append(
            f'<polygon class="overlay" points="{pts}" fill="none" '
            f'stroke="{opts.overlay_stroke}" stroke-width="{max(1, s // 15)}"/>'
        )
    pts = " ".join(xy(p) for p in P.vertices)
    lines.append(
        f'<polygon class="polygon" points="{pts}" fill="none" '
        f'stroke="{opts.stroke}" stroke-width="{max(1, s // 15)}"/>'
    )
    if opts.highlight_interior:
        lines.append('<g class="interior" fill="black">')
        for p in interior_points(P):
            lines.append(f'<circle cx="{p.x * s}" cy="{-p.y * s}" r="{r}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_tikz(P: Polygon, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions(format="tikz")
    x0, x1, y0, y1 = _bounds(P, opts.overlay)

    def path(Q: Polygon) -> str:
        return " -- ".join(f"({p.x},{p.y})" for p in Q.vertices) + " -- cycle;"

    unit = opts.scale / 40
    lines = [f"\\begin{{tikzpicture}}[scale={unit:g}]"]
    if opts.grid:
        lines.append(
            f"\\foreach \\x in {{{x0},...,{x1}}} \\foreach \\y in {{{y0},...,{y1}}} "
            "\\fill[gray] (\\x,\\y) circle (0.03);"
        )
    if opts.overlay is not None:
        lines.append(f"\\draw[thick,{opts.overlay_stroke}] {path(opts.overlay)}")
    lines.append(f"\\draw[thick,{opts.stroke}] {path(P)}")
    if opts.highlight_interior:
        for p in interior_points(P):
            lines.append(f"\\fill ({p.x},{p.y}) circle (0.08);")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render(P: Polygon, opts: RenderOptions) -> str:
    return render_svg(P, opts) if opts.format == "svg" else render_tikz(P, opts)
