from fractions import Fraction
from functools import cmp_to_key
from math import gcd

import pytest
from hypothesis import strategies as st

from tilekit.geometry import Vec, cross, validate_polygon
from tilekit.families import W_QUAD
from tilekit.lattice import Lattice, TranslateSet

F = Fraction


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    prev = _ACCEPTANCE.get(crit, True)
    _ACCEPTANCE[crit] = prev and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}")


# ---------------------------------------------------------------------------
# Shared objects


def poly(*pts):
    return validate_polygon(Vec(*p) for p in pts)


@pytest.fixture
def seven_fold_octagon():
    """Integer octagon (1,0),(2,0),(3,1),(3,2),(2,3),(1,3),(0,2),(0,1), recentred."""
    raw = [(1, 0), (2, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 2), (0, 1)]
    c = Vec(F(3, 2), F(3, 2))
    return validate_polygon(Vec(*p) - c for p in raw)


@pytest.fixture
def z2():
    return TranslateSet.of_lattice(Lattice.integer())


small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=9),
)

alphas = st.builds(Fraction, st.integers(1, 59), st.just(90))  # (0, 2/3)
betas = st.builds(Fraction, st.integers(1, 12), st.just(12))  # (0, 1]


@st.composite
def points_in_W(draw):
    """Strict convex combination of the corners of W."""
    w = [draw(st.integers(min_value=1, max_value=6)) for _ in range(4)]
    s = sum(w)
    x = sum(F(wi, s) * c.x for wi, c in zip(w, W_QUAD))
    y = sum(F(wi, s) * c.y for wi, c in zip(w, W_QUAD))
    return Vec(x, y)


@st.composite
def unimodular(draw, max_steps=4):
    """Integer matrix with det +-1, as a product of elementary shears."""
    a, b, c, d = 1, 0, 0, 1
    for _ in range(draw(st.integers(0, max_steps))):
        s = draw(st.integers(-2, 2))
        if draw(st.booleans()):
            a, b = a + s * c, b + s * d
        else:
            c, d = c + s * a, d + s * b
    if draw(st.booleans()):
        c, d = -c, -d
    return a, b, c, d


# primitive directions in the half-turn [0, pi)
DIRECTIONS = sorted(
    {(dx // gcd(dx, dy), dy // gcd(dx, dy)) for dx in range(-4, 5) for dy in range(0, 5) if dy > 0 or dx > 0}
)


@st.composite
def cs_polygons(draw, max_m=5):
    """Random centrally symmetric convex polygons from edge directions sorted by angle."""
    dirs = draw(st.lists(st.sampled_from(DIRECTIONS), min_size=2, max_size=max_m, unique=True))
    ordered = sorted(dirs, key=cmp_to_key(lambda u, v: -cross(Vec(*u), Vec(*v))))
    edges = [Vec(*d) * draw(st.integers(1, 3)) for d in ordered]
    v = -sum(edges[1:], edges[0]) / 2
    vs = []
    for e in edges + [-e for e in edges]:
        vs.append(v)
        v = v + e
    return validate_polygon(vs)
