import csv
import io
import json
import re
from fractions import Fraction

import pytest

import golden
from mapcensus import burnside, formulas
from mapcensus.series import Series1


def test_totient():
    want = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert [burnside.totient(k) for k in range(1, 13)] == want
    assert burnside.totient(97) == 96
    assert burnside.totient(1000) == 400
    with pytest.raises(ValueError):
        burnside.totient(0)


@pytest.mark.parametrize("family,want,first", [
    ("maps", golden.MAPS_BY_EDGES, 1),
    ("two_connected", golden.TWO_CONNECTED_BY_EDGES, 1),
    ("three_connected", golden.THREE_CONNECTED_BY_EDGES, 6),
])
def test_edge_census(family, want, first):
    t = burnside.census_edges(family, first + len(want) - 1)
    assert [t.entries[n] for n in range(first, first + len(want))] == want


def test_three_connected_below_six_edges_is_empty():
    t = burnside.census_edges("three_connected", 6)
    assert [t.entries[n] for n in range(1, 6)] == [0] * 5


@pytest.mark.parametrize("family,sparse,degree", [
    ("maps", golden.MAPS_VF, golden.MAPS_VF_DEGREE),
    ("two_connected", golden.TWO_CONNECTED_VF, golden.TWO_CONNECTED_VF_DEGREE),
    ("three_connected", golden.THREE_CONNECTED_VF, golden.THREE_CONNECTED_VF_DEGREE),
])
def test_vertex_face_census(family, sparse, degree):
    t = burnside.census_vertices_faces(family, degree)
    assert {k: t.entries[k] for k in golden.full_table(sparse, degree)} == golden.full_table(sparse, degree)


@pytest.mark.parametrize("family,n", [("maps", 12), ("two_connected", 14), ("three_connected", 18)])
def test_cross_check(family, n):
    rep = burnside.cross_check_tables(burnside.census_edges(family, n),
                                      burnside.census_vertices_faces(family, n))
    assert rep.ok and rep.checked == n


def test_cross_check_catches_disagreement():
    a = burnside.census_edges("maps", 4)
    b = burnside.census_vertices_faces("maps", 4)
    b.entries[(2, 2)] += 1
    rep = burnside.cross_check_tables(a, b)
    assert rep.mismatches == [(4, 57, 58)]
    with pytest.raises(ValueError):
        burnside.cross_check_tables(a, burnside.census_vertices_faces("two_connected", 4))


def test_vertex_face_tables_are_symmetric():
    # duality exchanges vertices and faces
    for fam in formulas.FAMILIES:
        t = burnside.census_vertices_faces(fam, 10)
        assert all(t.entries[(i, j)] == t.entries[(j, i)] for (i, j) in t.entries)


@pytest.mark.parametrize("variables,where", [(1, "n=6"), (2, "(i, j)=(4, 5)")])
def test_unprimed_three_connected_line_is_not_integral(variables, where):
    plan = burnside.assembly_plan("three_connected", variables, variant="printed")
    build = burnside.census_edges if variables == 1 else burnside.census_vertices_faces
    with pytest.raises(burnside.DivisibilityError, match=re.escape(where)):
        build("three_connected", 12, plan=plan)


def test_corrupted_formula_trips_divisibility():
    N = 10
    cat = formulas.family_catalog_1v("two_connected", N)
    bad = dict(cat)
    bad["G_vf"] = cat["G_vf"] + Series1([0, 0, 0, 1], N)
    with pytest.raises(burnside.DivisibilityError):
        burnside.census_edges("two_connected", N, catalog=formulas.SeriesCatalog1v(N, bad))
    # the untouched catalog goes through
    assert burnside.census_edges("two_connected", N, catalog=cat).as_list() == golden.TWO_CONNECTED_BY_EDGES


def test_fractional_coefficient_is_rejected():
    with pytest.raises(burnside.DivisibilityError):
        burnside._divide(Fraction(7, 2), 1, "n=1")
    with pytest.raises(burnside.DivisibilityError):
        burnside._divide(-4, 2, "n=1")
    assert burnside._divide(12, 4, "n=2") == 3


def test_csv_and_json_layout():
    t = burnside.census_edges("three_connected", 9)
    rows = list(csv.reader(io.StringIO(t.to_csv())))
    assert rows == [["n", "count"], ["6", "1"], ["7", "0"], ["8", "1"], ["9", "2"]]
    doc = json.loads(t.to_json())
    assert doc["family"] == "three_connected" and doc["mode"] == "by_edges"
    assert doc["entries"][0] == {"n": 6, "count": "1"}
    v = burnside.census_vertices_faces("maps", 2)
    assert v.to_csv().splitlines() == ["i,j,count", "0,1,1", "1,0,1", "0,2,1", "1,1,2", "2,0,1"]


def test_counts_stay_exact_beyond_machine_integers():
    t = burnside.census_edges("maps", 40)
    assert t.entries[40] > 2 ** 64
    assert all(isinstance(c, int) for c in t.entries.values())


def test_bad_arguments():
    with pytest.raises(ValueError):
        burnside.census_edges("maps", 0)
    with pytest.raises(ValueError):
        burnside.assembly_plan("trees", 1)
