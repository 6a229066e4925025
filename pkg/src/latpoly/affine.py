"""Integral affine maps ``v -> A v + b`` and their action on polygons."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .bezout import canonical_apex
from .core import Point, Polygon, as_point, cross, is_primitive, make_polygon


class UnimodularityError(ValueError):
    pass


class CollinearityError(ValueError):
    pass


class SpacingError(ValueError):
    pass


@dataclass(frozen=True)
class AffineMap:
    m11: int
    m12: int
    m21: int
    m22: int
    tx: int = 0
    ty: int = 0

    @classmethod
    def identity(cls) -> AffineMap:
        return cls(1, 0, 0, 1, 0, 0)

    @classmethod
    def from_rows(cls, linear, translation=(0, 0)) -> AffineMap:
        (a, b), (c, d) = linear
        return cls(a, b, c, d, translation[0], translation[1])

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def unimodular(self) -> bool:
        return all(isinstance(v, int) for v in self.coeffs()) and abs(self.det) == 1

    def coeffs(self) -> tuple[int, ...]:
        return (self.m11, self.m12, self.m21, self.m22, self.tx, self.ty)

    def __call__(self, p: Sequence[int]) -> Point:
        x, y = p
        return Point(self.m11 * x + self.m12 * y + self.tx, self.m21 * x + self.m22 * y + self.ty)

    def __matmul__(self, other: AffineMap) -> AffineMap:
        """Composition: ``(F @ G)(p) == F(G(p))``."""
        a, b, c, d = self.m11, self.m12, self.m21, self.m22
        e, f, g, h = other.m11, other.m12, other.m21, other.m22
        tx, ty = self((other.tx, other.ty))
        return AffineMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, tx, ty)

    def to_dict(self) -> dict:
        return {
            "linear": [[self.m11, self.m12], [self.m21, self.m22]],
            "translation": [self.tx, self.ty],
        }

    @classmethod
    def from_dict(cls, data: dict) -> AffineMap:
        return cls.from_rows(data["linear"], data.get("translation", (0, 0)))


def _require_unimodular(F: AffineMap) -> None:
    if not F.unimodular:
        raise UnimodularityError(f"map is not integral unimodular (det = {F.det})")


def apply_map(F: AffineMap, P: Polygon) -> Polygon:
    _require_unimodular(F)
    image = [F(p) for p in P.vertices]
    if F.det < 0:
        image.reverse()
    return make_polygon(image)


def invert_map(F: AffineMap) -> AffineMap:
    _require_unimodular(F)
    det = F.det
    # Adjugate divided by det = +-1 stays integral.
    a, b, c, d = F.m22 * det, -F.m12 * det, -F.m21 * det, F.m11 * det
    tx = -(a * F.tx + b * F.ty)
    ty = -(c * F.tx + d * F.ty)
    return AffineMap(a, b, c, d, tx, ty)


def normalize_collinear(points: Sequence[Sequence[int]]) -> AffineMap:
    """Unimodular map sending consecutive collinear lattice points to (1,0)..(k,0).

    The linear part has rows ``(-b, a)`` and ``(-q, p)`` where ``(p, q)`` is
    the step between neighbours and ``a*q - b*p == 1``. That pair is the
    canonical apex of the step, which makes the choice deterministic.
    """
    pts = [as_point(p) for p in points]
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    step = pts[1] - pts[0]
    if step == (0, 0):
        raise SpacingError("repeated point")
    for a, b in zip(pts, pts[1:]):
        if cross(step, b - a) != 0 or cross(step, b - pts[0]) != 0:
            raise CollinearityError("points are not collinear")
    if not is_primitive(step):
        raise SpacingError(f"step {tuple(step)} skips lattice points")
    for a, b in zip(pts, pts[1:]):
        if b - a != step:
            raise SpacingError("points are not consecutive lattice points in order")

    p, q = step
    a, b = canonical_apex((0, 0), step)
    linear = AffineMap(-b, a, -q, p)
    x, y = linear(pts[0])
    return AffineMap(-b, a, -q, p, 1 - x, -y)


_GENERATORS = (
    AffineMap(1, 1, 0, 1),
    AffineMap(1, -1, 0, 1),
    AffineMap(1, 0, 1, 1),
    AffineMap(1, 0, -1, 1),
    AffineMap(0, 1, 1, 0),
    AffineMap(-1, 0, 0, 1),
    AffineMap(1, 0, 0, -1),
)


def random_unimodular(rng: random.Random, max_len: int = 8, max_shift: int = 10) -> AffineMap:
    """Random word of shears, swaps and negations plus a bounded translation."""
    F = AffineMap.identity()
    for _ in range(rng.randint(0, max_len)):
        F = rng.choice(_GENERATORS) @ F
    return AffineMap(
        F.m11, F.m12, F.m21, F.m22,
        rng.randint(-max_shift, max_shift), rng.randint(-max_shift, max_shift),
    )
