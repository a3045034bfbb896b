import os
import pathlib

import pytest

import qtoric

DATA = pathlib.Path(os.environ.get("QTORIC_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))

CUBE_M = [[1, 0, 0, -1, -1, -1], [0, 1, 0, 0, -1, -2], [0, 0, 1, 0, -1, -1]]
CUBE_N = [[1, 0, 0, -1, -1, -1], [0, 1, 0, 0, -1, -2], [0, 0, 1, -2, -1, -1]]
PHI = [[-1, -1, -1], [2, 1, 2], [0, 0, -1]]


def neg(m):
    return [[-v for v in row] for row in m]


def test_polytopes_and_betti():
    p = qtoric.Polytope.polygon(5)
    assert (p.dim, p.num_facets) == (2, 5)
    t = qtoric.betti_table(p)
    assert t[(1, 2)] == 5 and t[(2, 3)] == 5
    assert t == qtoric.polygon_betti(5)

    prod = qtoric.Polytope.simplex(2) * qtoric.Polytope.polygon(5)
    table = qtoric.betti_table(prod, jobs=2)
    assert qtoric.identify_product(table, prod.dim, prod.num_facets) == (2, 3)
    other = qtoric.betti_table(qtoric.Polytope.simplex(1) * qtoric.Polytope.simplex(3))
    assert qtoric.identify_product(other) is None

    assert qtoric.Polytope.from_json(p.to_json()) == p
    assert qtoric.Polytope.from_json(str(DATA / "cube.json")) == qtoric.Polytope.bundle(1, 2)


def test_nonsingular_and_cohomology():
    cube = qtoric.Polytope.bundle(1, 2)
    assert qtoric.check_nonsingular(cube, CUBE_M)["ok"]
    bad = qtoric.check_nonsingular(qtoric.Polytope.bundle(1, 1), [[1, 0, 0, -1, -2], [0, 1, 0, 0, -1], [0, 0, 1, 0, -2]])
    assert not bad["ok"]
    assert bad["vertex"] == [0, 1, 4] and bad["determinant"] == -2

    m = qtoric.present_cohomology(cube, CUBE_M)
    assert m.ranks == [1, 3, 3, 1]
    assert m.generators == ["v4", "v5", "v6"]
    assert not m.torsion
    stored = qtoric.Ring.from_json(str(DATA / "cubeM_ring.json"))
    assert stored.ranks == m.ranks

    cp2cp2 = qtoric.Ring.from_json(str(DATA / "cp2cp2_ring.json"))
    assert cp2cp2.signature_p1() == (-2, -6)
    assert cp2cp2.pairing()["determinant"] == 1


def test_isomorphisms():
    cube = qtoric.Polytope.bundle(1, 2)
    m = qtoric.present_cohomology(cube, CUBE_M)
    n = qtoric.present_cohomology(cube, CUBE_N)
    assert qtoric.verify_iso(m, n, PHI)["status"] == "ok"
    assert qtoric.verify_iso(m, m, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])["status"] == "not-unimodular"
    found = qtoric.search_iso(m, n, bound=2, jobs=2)
    assert PHI in found or neg(PHI) in found
    assert found == qtoric.search_iso(m, n, bound=2, jobs=1)


def test_bundles():
    cp2 = qtoric.Ring.from_json(str(DATA / "cp2_ring.json"))
    poly, mat = qtoric.bundle_char_matrix([[1, 0, -1], [0, 1, -1]], [[2]])
    assert poly == qtoric.Polytope.bundle(1, 1)
    assert qtoric.check_nonsingular(poly, mat)["ok"]

    ring = qtoric.projectivization_ring(cp2, [[0]])
    assert ring.ranks == [1, 2, 2, 1]
    assert ring.fiber_index == 0
    assert qtoric.normalize_twists([[1], [3]]) == [[-3], [-2]]
    assert len(qtoric.total_chern(cp2, [[2]])) >= 2
    assert qtoric.chern_isomorphic(cp2, [[2]], cp2, [[2]])
    autos = qtoric.fiber_automorphisms(cp2, [[2]])
    assert [a["epsilon"] for a in autos] == [1, -1]
    assert all(a["ring_map_verified"] for a in autos)


def test_errors():
    with pytest.raises(qtoric.QtoricError, match="invalid-parameter"):
        qtoric.Polytope.polygon(2)
    with pytest.raises(ValueError):
        qtoric.check_nonsingular(qtoric.Polytope.polygon(4), [[1, 0], [0, 1]])
