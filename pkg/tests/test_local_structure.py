from fractions import Fraction as F

import pytest

from tilekit.errors import NotAVertexOfTiling, WheelMatchingFailed, WindingDecompositionViolation
from tilekit.families import decagon_from_vertex, octagon_type1, octagon_type2
from tilekit.geometry import Vec, polygon_from_half
from tilekit.lattice import Lattice, TranslateSet
from tilekit.local_structure import (
    Angle,
    _chain_wheels,
    check_vertex_counts,
    edge_support_bound,
    edge_support_counts,
    is_tiling_vertex,
    period_vertices,
    ray,
    VertexStar,
    vertex_star,
    wheels_at,
)

SQUARE = polygon_from_half([Vec(1, 1), Vec(-1, 1)])
GRID2 = TranslateSet.of_lattice(Lattice(Vec(2, 0), Vec(0, 2)))
D8 = octagon_type1(F(1, 2))
X8 = TranslateSet.of_lattice(D8.lattice)
DEC = decagon_from_vertex(Vec(F(-5, 4), F(3, 2)))
XDEC = TranslateSet.of_lattice(DEC.lattice)


def test_square_corner():
    star = vertex_star(SQUARE, GRID2, Vec(1, 1))
    assert len(star.on_boundary) == 4
    assert star.in_interior_count == 0 and star.edge_through_count == 0
    w = wheels_at(SQUARE, GRID2, Vec(1, 1))
    assert len(w.wheels) == 1 and len(w.wheels[0].translates) == 4
    assert w.wheels[0].winding == 1
    assert (w.phi, w.ell, w.kappa) == (1, 0, 2)


def test_octagon_vertex():
    v = Vec(F(7, 8), -2)
    star = vertex_star(D8.polygon, X8, v)
    assert star.in_interior_count == 3
    w = wheels_at(D8.polygon, X8, v)
    assert (w.phi, w.ell, w.kappa) == (2, 1, 1)
    assert w.total == 5
    # winding decomposition: phi = kappa (m - 1) / 2 + ell / 2
    assert 2 * w.phi == w.kappa * (D8.polygon.m - 1) + w.ell


def test_decagon_vertices():
    for v in period_vertices(DEC.polygon, XDEC):
        w = wheels_at(DEC.polygon, XDEC, v)
        assert (w.interior_count, w.phi, w.ell, w.kappa) == (3, 2, 0, 1)


def test_not_a_vertex():
    with pytest.raises(NotAVertexOfTiling):
        vertex_star(D8.polygon, X8, Vec(F(1, 10), F(1, 7)))
    assert not is_tiling_vertex(D8.polygon, X8, Vec(0, 0))
    assert is_tiling_vertex(D8.polygon, X8, D8.polygon.vertex(3) + D8.lattice.point(4, -9))


def test_vertex_count_tables(seven_fold_octagon, z2):
    rep = check_vertex_counts(D8.polygon, X8, 5)
    assert rep.passed and len(rep.rows) == 2
    assert check_vertex_counts(SQUARE, GRID2, 1).rows[0].phi == 1
    assert check_vertex_counts(SQUARE, GRID2, 1).rows[0].interior_count == 0
    rep7 = check_vertex_counts(seven_fold_octagon, z2, 7)
    assert rep7.passed and all(r.total == 7 for r in rep7.rows)
    assert not check_vertex_counts(D8.polygon, X8, 4).passed
    doc = rep.to_json()
    assert doc["pass"] and doc["rows"][0]["total"] == 5


def test_period_vertices_with_region():
    # vertices found inside a window reduce to the same classes
    assert period_vertices(D8.polygon, X8, (F(-3), F(-3), F(3), F(3))) == period_vertices(D8.polygon, X8)


def test_vertex_counts_independent_of_translate_choice():
    # the same vertex class seen from a far-away representative gives the same row
    v = D8.polygon.vertex(1)
    far = v + D8.lattice.point(-6, 11)
    a, b = wheels_at(D8.polygon, X8, v), wheels_at(D8.polygon, X8, far)
    assert (a.phi, a.ell, a.interior_count) == (b.phi, b.ell, b.interior_count)


def test_edge_support():
    assert edge_support_bound(4) == 1 and edge_support_bound(5) == 1
    assert edge_support_bound(6) == 2 and edge_support_bound(3) == 0
    for inst in (D8, DEC, octagon_type2(1)):
        X = TranslateSet.of_lattice(inst.lattice)
        for v in period_vertices(inst.polygon, X):
            counts = edge_support_counts(inst.polygon, X, v)
            assert counts
            assert min(c.count for c in counts) >= edge_support_bound(inst.polygon.m)


def test_ray_and_reference_crossing():
    assert ray(Vec(3, -6)) == ray(Vec(1, -2)) == Vec(F(1, 3), F(-2, 3))
    t = Vec(0, 0)
    assert Angle(t, ray(Vec(0, -1)), ray(Vec(0, 1)), 1, None).crosses_reference()
    assert not Angle(t, ray(Vec(0, 1)), ray(Vec(0, -1)), 1, None).crosses_reference()
    # half-open: starting on the reference counts, ending on it does not
    assert Angle(t, ray(Vec(1, 0)), ray(Vec(0, 1)), 1, None).crosses_reference()
    assert not Angle(t, ray(Vec(0, -1)), ray(Vec(1, 0)), 1, None).crosses_reference()


def test_chain_matching_failure():
    t = Vec(0, 0)
    lonely = [Angle(t, ray(Vec(1, 0)), ray(Vec(0, 1)), 1, None)]
    with pytest.raises(WheelMatchingFailed):
        _chain_wheels(lonely)


def test_open_chain_is_not_a_wheel():
    # rows of squares with gaps between them: at a corner the angles do not close up
    X = TranslateSet.of_lattice(Lattice(Vec(2, 0), Vec(0, 4)))
    with pytest.raises(WheelMatchingFailed):
        wheels_at(SQUARE, X, Vec(1, 1))


def test_decomposition_violation():
    # one full turn around a vertex of an octagon tiling would need kappa = 2/3
    v = Vec(F(7, 8), -2)
    t = Vec(0, 0)
    quarter = [Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(0, -1)]
    angles = [Angle(t, quarter[i], quarter[(i + 1) % 4], 1, None) for i in range(4)]
    star = VertexStar(v, [t] * 4, 0, 0, angles)
    with pytest.raises(WindingDecompositionViolation):
        wheels_at(D8.polygon, X8, v, star=star)


def test_wheels_use_every_boundary_translate():
    for v in period_vertices(D8.polygon, X8):
        w = wheels_at(D8.polygon, X8, v)
        star = vertex_star(D8.polygon, X8, v)
        assert sum(len(x.translates) for x in w.wheels) == len(star.on_boundary)
        assert w.phi == sum(a.crosses_reference() for a in star.angles)
