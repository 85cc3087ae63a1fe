import random

import pytest

from mapcensus import oracle


@pytest.fixture(scope="module")
def classes5():
    return oracle.enumerate_classes(5, budget=5)


def test_one_edge_maps():
    assert oracle.LOOP_MAP.n_vertices == 1 and oracle.LOOP_MAP.n_faces == 2
    assert oracle.LINK_MAP.n_vertices == 2 and oracle.LINK_MAP.n_faces == 1
    assert oracle.has_loop(oracle.LOOP_MAP) and not oracle.has_loop(oracle.LINK_MAP)
    assert oracle.canonical_code(oracle.LOOP_MAP) != oracle.canonical_code(oracle.LINK_MAP)


def test_class_counts_are_unrooted_map_numbers(classes5):
    assert [len(classes5[n]) for n in range(1, 6)] == [2, 4, 14, 57, 312]


def test_every_class_is_planar_and_connected(classes5):
    for n in range(1, 6):
        for code, m in classes5[n].items():
            assert m.is_connected() and m.is_planar()
            assert oracle.canonical_code(m) == code


def test_rooted_counts(classes5):
    assert oracle.rooted_counts("maps", 5, classes=classes5) == [2, 9, 54, 378, 2916]
    assert oracle.rooted_counts("two_connected", 5, classes=classes5) == [2, 1, 2, 6, 22]


def test_rooted_quadrangulations_match_rooted_maps():
    # the angular bijection: quadrangulations with n faces <-> maps with n edges
    assert oracle.rooted_quadrangulations(3, budget=6) == [2, 9, 54]


def test_canonical_code_ignores_dart_names(classes5):
    rng = random.Random(7)
    for m in list(classes5[4].values())[:20]:
        # relabel edges and flip edge orientations
        n = m.n_edges
        perm_edges = list(range(n))
        rng.shuffle(perm_edges)
        flips = [rng.random() < 0.5 for _ in range(n)]
        ren = {}
        for e in range(n):
            a, b = 2 * perm_edges[e], 2 * perm_edges[e] + 1
            if flips[e]:
                a, b = b, a
            ren[2 * e], ren[2 * e + 1] = a, b
        sigma = [0] * (2 * n)
        for d in range(2 * n):
            sigma[ren[d]] = ren[m.sigma[d]]
        other = oracle.RotationMap(n, tuple(sigma))
        assert oracle.canonical_code(other) == oracle.canonical_code(m)
        assert oracle.automorphism_count(other) == oracle.automorphism_count(m)


def test_from_code_round_trip(classes5):
    for code in list(classes5[5])[:50]:
        assert oracle.canonical_code(oracle.from_code(code)) == code


def test_bad_rotation_system():
    with pytest.raises(ValueError):
        oracle.RotationMap(2, (0, 0, 1, 2))


def test_agreement_up_to_five_edges():
    rep = oracle.oracle_vs_formula(5, budget=5)
    assert rep.ok, rep.as_text()
    assert len(rep.compared) == 6


@pytest.mark.extended
def test_agreement_up_to_six_edges():
    rep = oracle.oracle_vs_formula(6, budget=6)
    assert rep.ok, rep.as_text()


def test_tetrahedron():
    classes = oracle.enumerate_classes(6, budget=6)
    tri = [m for m in classes[6].values() if oracle.is_3connected(m)]
    assert len(tri) == 1
    t = tri[0]
    assert (t.n_vertices, t.n_faces) == (4, 4)
    assert oracle.automorphism_count(t) == 12
    assert all(len(f) == 3 for f in t.faces())


def test_budget(monkeypatch):
    monkeypatch.delenv(oracle.BUDGET_ENV, raising=False)
    assert oracle.oracle_budget() == oracle.DEFAULT_BUDGET
    monkeypatch.setenv(oracle.BUDGET_ENV, "4")
    assert oracle.oracle_budget() == 4
    assert oracle.oracle_budget(3) == 3
    with pytest.raises(oracle.OracleBudgetError):
        oracle.oracle_budget(oracle.MAX_BUDGET + 1)
    with pytest.raises(oracle.OracleBudgetError):
        oracle.enumerate_classes(9)


def test_dump_codes(tmp_path, classes5):
    path = tmp_path / "codes.txt"
    count = oracle.dump_codes(str(path), 3, budget=3)
    lines = path.read_text().splitlines()
    assert count == len(lines) == 2 + 4 + 14
    assert lines[0].startswith("1\t")
