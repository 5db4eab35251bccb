import json
from fractions import Fraction as F

from hypothesis import given, settings

from conftest import alphas, cs_polygons, points_in_W
from tilekit.arrangement import verify_k_fold
from tilekit.bolle import check_bolle
from tilekit.families import classify, decagon_from_vertex, octagon_type1
from tilekit.geometry import Vec
from tilekit.jsonio import dumps, load_polygon, load_translates, polygon_from_json, write_json
from tilekit.lattice import Lattice, TranslateSet, lattice_from_json, translates_from_json
from tilekit.local_structure import check_vertex_counts


@settings(max_examples=50)
@given(cs_polygons())
def test_polygon_round_trip(P):
    assert polygon_from_json(json.loads(dumps(P.to_json()))) == P


@settings(max_examples=30, deadline=None)
@given(alphas)
def test_instance_round_trip(alpha):
    inst = octagon_type1(alpha)
    doc = json.loads(dumps(inst.to_json()))
    assert polygon_from_json(doc) == inst.polygon
    assert lattice_from_json(doc["lattice"]) == inst.lattice
    assert translates_from_json(doc) == TranslateSet.of_lattice(inst.lattice)


@settings(max_examples=20, deadline=None)
@given(points_in_W())
def test_decagon_parameter_serialises(v1):
    doc = decagon_from_vertex(v1).to_json()
    assert Vec(*doc["parameter"]) == v1


def test_files(tmp_path):
    X = TranslateSet(Lattice(Vec(2, 0), Vec(F(5, 4), 1)), (Vec(0, 0), Vec(F(1, 3), 0)))
    path = tmp_path / "x.json"
    write_json(path, X.to_json())
    assert load_translates(path) == X
    ppath = tmp_path / "p.json"
    P = octagon_type1(F(1, 2)).polygon
    write_json(ppath, P.to_json())
    assert load_polygon(ppath) == P
    assert '["7/8", "-2"]' in ppath.read_text()


def test_reports_are_json():
    inst = octagon_type1(F(1, 2))
    X = TranslateSet.of_lattice(inst.lattice)
    for doc in (
        check_bolle(inst.polygon, inst.lattice).to_json(),
        verify_k_fold(inst.polygon, X, 5).to_json(),
        check_vertex_counts(inst.polygon, X, 5).to_json(),
        classify(inst.polygon).to_json(),
    ):
        assert json.loads(dumps(doc)) == doc
