
import random

import pytest
from hypothesis import strategies as st

from latpoly.core import PolygonError, make_polygon, strict_hull
from latpoly.enumeration import corpus

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(seed=7, box_size=10, count=300)


def _hull_polygon(points):
    hull = strict_hull(points)
    if len(hull) < 3:
        return None
    try:
        return make_polygon(hull)
    except PolygonError:
        return None


def _polygon_from(points):
    # Fall back to a resample seeded by the drawn points rather than filtering,
    # since most random hulls have some non-primitive edge.
    P = _hull_polygon(points)
    rng = random.Random(repr(points))
    while P is None:
        P = _hull_polygon([(rng.randint(-12, 12), rng.randint(-12, 12)) for _ in range(rng.randint(3, 9))])
    return P


coords = st.integers(min_value=-12, max_value=12)
point_sets = st.lists(st.tuples(coords, coords), min_size=3, max_size=9)
polygons = point_sets.map(_polygon_from)
