from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from conftest import small_rationals
from tilekit.bolle import check_bolle, ext_gcd, half_lattice_points_on_segment
from tilekit.families import octagon_type1
from tilekit.geometry import Vec, cross, polygon_from_half
from tilekit.lattice import Lattice, make_box, points_in_box

Z2 = Lattice.integer()
LAMBDA_HALF = Lattice(Vec(2, 0), Vec(F(5, 4), 1))


@settings(max_examples=200)
@given(st.integers(-500, 500), st.integers(-500, 500))
def test_ext_gcd_bezout(a, b):
    g, x, y = ext_gcd(a, b)
    assert a * x + b * y == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def test_segment_on_half_integer_grid():
    seg = (Vec(0, F(-3, 2)), Vec(2, F(-3, 2)))
    pts = half_lattice_points_on_segment(Z2, seg).points()
    assert pts == [Vec(x, F(-3, 2)) for x in (0, F(1, 2), 1, F(3, 2), 2)]


def test_segment_on_octagon_edge():
    seg = (Vec(F(7, 8), -2), Vec(F(-9, 8), -2))
    pts = set(half_lattice_points_on_segment(LAMBDA_HALF, seg).points())
    assert pts == {Vec(F(1, 2), -2), Vec(F(-1, 2), -2)}


def test_segment_without_half_lattice_points():
    seg = (Vec(F(1, 3), F(1, 3)), Vec(F(2, 3), F(2, 3)))
    prog = half_lattice_points_on_segment(Lattice(Vec(2, 0), Vec(0, 2)), seg)
    assert prog.count == 0 and prog.points() == []
    assert prog.first_interior() is None


def _brute_half_points(L, seg):
    a, b = seg
    half = Lattice(L.b1 / 2, L.b2 / 2)
    box = make_box(min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y))
    return sorted(p for p in points_in_box(half, box) if cross(b - a, p - a) == 0)


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([Z2, LAMBDA_HALF, Lattice(Vec(3, 1), Vec(1, 2)), Lattice(Vec(F(2, 3), 0), Vec(F(1, 5), F(3, 4)))]),
    small_rationals,
    small_rationals,
    small_rationals,
    small_rationals,
)
def test_progression_matches_enumeration(L, x0, y0, x1, y1):
    a, b = Vec(x0, y0), Vec(x1, y1)
    if a == b:
        return
    got = sorted(half_lattice_points_on_segment(L, (a, b)).points())
    assert got == _brute_half_points(L, (a, b))


def test_bolle_seven_fold_octagon(seven_fold_octagon):
    r = check_bolle(seven_fold_octagon, Z2)
    assert r.passed and r.multiplicity == 7
    assert r.area == 7 and r.det == 1


def test_bolle_octagon_family_member():
    P = octagon_type1(F(1, 2)).polygon
    r = check_bolle(P, LAMBDA_HALF)
    assert r.passed and r.multiplicity == 5
    assert (r.area, r.det) == (10, 2)
    assert len(r.per_edge) == 8 and all(e.verdict for e in r.per_edge)


def test_bolle_square():
    P = polygon_from_half([Vec(1, 1), Vec(-1, 1)])
    r = check_bolle(P, Lattice(Vec(2, 0), Vec(0, 2)))
    assert r.passed and r.multiplicity == 1


def test_bolle_rejects_wrong_lattice():
    P = octagon_type1(F(1, 2)).polygon
    r = check_bolle(P, Lattice(Vec(2, 0), Vec(0, 2)))
    assert not r.passed and r.multiplicity is None
    assert "edge condition fails" in r.diagnostic
    assert not all(e.verdict for e in r.per_edge)


def test_bolle_decagon_case_five_lattice_fails():
    from tilekit.families import decagon_from_vertex, case_lattices

    P = decagon_from_vertex(Vec(F(-5, 4), F(3, 2))).polygon
    (case_v,) = [c for c in case_lattices(P) if c.case == "v"]
    r = check_bolle(P, Lattice(*case_v.basis))
    assert not r.passed
    assert r.area_ratio == F(5, 3)
    assert not r.conditions_hold and r.multiplicity is None


def test_report_json_shape():
    P = octagon_type1(F(1, 2)).polygon
    doc = check_bolle(P, LAMBDA_HALF).to_json()
    assert doc["pass"] is True and doc["multiplicity"] == 5
    assert doc["area"] == "10" and doc["det"] == "2"
    assert doc["per_edge"][0]["interior_half_lattice_witness"] is not None
    text = check_bolle(P, LAMBDA_HALF).to_text()
    assert text.splitlines()[0] == "bolle: PASS"
