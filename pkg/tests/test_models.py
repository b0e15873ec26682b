import json
import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from linedist.exactalg import (GF, QQ, MultiPoly, Ring, matmul, plucker_name, plucker_names, plucker_ring,
                               poly_parse, skew_matrix)
from linedist.grasscore import param_image_dimension
from linedist.groebner import (IdealHandle, contains, eliminate, ideal_degree, ideal_dimension, ideal_equals,
                               intersect)
from linedist.models import (FAMILIES, ModelSpec, SchubertIndex, base_locus_ideal, base_matrix, chow_cubic,
                             generic_ci_model, grassmannian_generators,
                             grassmannian_ideal, nilpotent_matrix, pgr_gens, resolve_model, schubert_chart,
                             schubert_ideal, schubert_model, schubert_squared_ideal,
                             sym_matrix, sym_ring, toric_model)
from linedist.degrees import sq_degree_closed

P = 32003


def random_param_point(par, rng):
    return {v: Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for v in par.params}


def plucker_point(par, values, n):
    vals = [f.evaluate(values) for f in par.plucker()]
    return dict(zip(plucker_names(n), vals))


@pytest.mark.parametrize("n, count", [(4, 1), (5, 5), (6, 15), (3, 0)])
def test_grassmannian_generator_count(n, count):
    assert len(grassmannian_generators(n)) == count


def test_schubert_vanishing_coordinates():
    s = SchubertIndex(2, 5, 5)
    assert s.vanishing() == [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)]
    assert schubert_ideal(SchubertIndex(1, 2, 5)).gens == grassmannian_ideal(5).gens
    with pytest.raises(ValueError):
        SchubertIndex(3, 3, 5)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_schubert_dimensions(n):
    for i, j in combinations(range(1, n + 1), 2):
        s = SchubertIndex(i, j, n)
        assert ideal_dimension(schubert_ideal(s, GF(P))) - 1 == 2 * n - i - j - 1
        assert len(schubert_chart(s).params) == s.dim


def test_squared_generators_examples():
    R = sym_ring(4)
    S23 = schubert_squared_ideal(SchubertIndex(2, 3, 4))
    assert all(contains(S23, poly_parse(v, R)) for v in ("p11", "p12", "p13", "p14"))
    S14 = schubert_squared_ideal(SchubertIndex(1, 4, 4))
    assert all(contains(S14, poly_parse(t, R)) for t in ("p14", "p24", "p34", "p11 + p22 + p33 - p44"))


@pytest.mark.parametrize("i, j", list(combinations(range(1, 5), 2)))
def test_squared_schubert_degrees_n4(i, j):
    s = SchubertIndex(i, j, 4)
    assert ideal_degree(schubert_squared_ideal(s, GF(P))) == sq_degree_closed(i, j, 4)


def _squared_image_ideal(s: SchubertIndex, field=GF(P)) -> IdealHandle:
    n = s.n
    R = Ring(list(plucker_ring(n).names) + list(sym_ring(n).names))
    X = [[g.to_ring(R) for g in row] for row in skew_matrix(plucker_ring(n), n, field)]
    Pm = [[g.to_ring(R) for g in row] for row in sym_matrix(n, field)]
    X2 = matmul(X, X)
    gens = [Pm[a][b] - X2[a][b] for a in range(n) for b in range(a, n)]
    gens += [g.to_ring(R) for g in schubert_ideal(s, field).gens]
    return eliminate(IdealHandle(gens, R, field), plucker_ring(n).names)


@pytest.mark.parametrize("i, j", [(2, 3), (1, 3), (1, 4), (2, 4)])
def test_squared_generators_match_elimination(i, j):
    s = SchubertIndex(i, j, 4)
    assert ideal_equals(_squared_image_ideal(s), schubert_squared_ideal(s, GF(P)))


def test_pgr_generators():
    assert len(pgr_gens(4).gens) == 10
    assert len(pgr_gens(5).gens) == 15
    assert len(pgr_gens(6).gens) == 21 + 20 * 20      # quadrics plus all 3x3 minors
    assert any(g.total_degree() == 3 for g in pgr_gens(6).gens)
    assert ideal_degree(pgr_gens(4, GF(P))) == 12


def test_toric_rows():
    chow = toric_model("chow", (1, 2, 3))
    rows = [[str(f) for f in r] for r in chow.parametric.rows]
    assert rows == [["1", "t", "t^2", "t^3"], ["0", "1", "x", "y"]]
    tan = toric_model("tangent", (1, 2, 3))
    assert [str(f) for f in tan.parametric.rows[1]] == ["0", "1", "2*t", "3*t^2"]
    sec = toric_model("secant", (1, 2, 3))
    assert not sec.parametric.identifiable and sec.parametric.fiber_size == 2
    for bad in [(2, 1, 3), (2, 4, 6), (1, 2)]:
        with pytest.raises(ValueError):
            toric_model("chow", bad)


def test_chow_cubic():
    f = chow_cubic()
    assert f.total_degree() == 3 and f.is_homogeneous()
    par = toric_model("chow", (1, 2, 3)).parametric
    rng = random.Random(0)
    for _ in range(20):
        assert f.evaluate(plucker_point(par, random_param_point(par, rng), 4)) == 0


def test_lines_meeting_a_line_form_s13():
    # lines meeting span(e3, e4): rows (0, 0, 1, t) and (1, x, 0, y); x12 vanishes identically
    R = Ring(["t", "x", "y"])
    t, x, y = (MultiPoly.var(v, R) for v in R.names)
    one, zero = MultiPoly.constant(1, R), MultiPoly.zero(R)
    from linedist.models import Parametrization
    par = Parametrization(R, [[zero, zero, one, t], [one, x, zero, y]])
    assert par.plucker()[0].is_zero()
    coords = par.plucker()

    def F(v):
        return np.array([c.evaluate_float(v) for c in coords])
    assert param_image_dimension(F, 3).rank == 3       # affine chart of a threefold
    assert SchubertIndex(1, 3, 4).dim == 3


@pytest.mark.parametrize("ref", ["schubert:2,5", "schubert:1,3", "schubert:3,5", "chow"])
def test_parametric_points_satisfy_equations(ref):
    model = resolve_model(ref, 5 if "5" in ref else 4)
    gens = list(model.implicit.gens)
    rng = random.Random(1)
    for _ in range(20):
        pt = plucker_point(model.parametric, random_param_point(model.parametric, rng), model.n)
        assert all(g.evaluate(pt) == 0 for g in gens)


def test_base_locus_n4_components():
    R = plucker_ring(4)
    A = IdealHandle([poly_parse(s, R) for s in
                     ("x14 - x23", "x13 + x24", "x12 - x34", "x23^2 + x24^2 + x34^2")], R, QQ)
    B = IdealHandle([poly_parse(s, R) for s in
                     ("x14 + x23", "x13 - x24", "x12 + x34", "x23^2 + x24^2 + x34^2")], R, QQ)
    assert ideal_equals(intersect(A, B), base_locus_ideal(4))


@pytest.mark.parametrize("n, degree, dim", [(4, 4, 1), (5, 8, 3), (6, 20, 5)])
def test_base_locus_degree_and_dimension(n, degree, dim):
    I = base_locus_ideal(n, GF(P))
    assert ideal_degree(I) == degree
    assert ideal_dimension(I) - 1 == dim        # 2n - 7 for n >= 5


def _evaluate_complex(f: MultiPoly, M, n):
    point = {plucker_name(i + 1, j + 1, n): M[i][j] for i, j in combinations(range(n), 2)}
    total = 0j
    for m, c in f.coeffs().items():
        term = complex(c)
        for v, e in zip(f.ring.names, f.ring.unpack(m)):
            term *= point[v] ** e
        total += term
    return total


@pytest.mark.parametrize("n", [4, 5, 6])
def test_base_matrix_in_base_locus(n):
    M = base_matrix(n)
    for g in base_locus_ideal(n).gens:
        assert abs(_evaluate_complex(g, M, n)) < 1e-12
    A = np.array(M)
    assert np.allclose(A @ A, 0)


@pytest.mark.parametrize("n", [3, 5])
def test_nilpotent_matrix(n):
    A = np.array(nilpotent_matrix(n))
    assert np.allclose(A, -A.T)
    assert abs(np.trace(A @ A)) < 1e-12
    assert np.abs(A @ A).max() > 0.5
    assert np.linalg.matrix_rank(A) == 2


def test_generic_ci_reproducible():
    a = generic_ci_model(4, [1, 2], seed=3)
    b = generic_ci_model(4, [1, 2], seed=3)
    c = generic_ci_model(4, [1, 2], seed=4)
    assert a.equations == b.equations and a.equations != c.equations
    assert [f.total_degree() for f in a.equations] == [1, 2]
    for f in a.equations:
        assert all(-20 <= v <= 20 for v in f.coeffs().values())
    assert a.dim == 2


def test_model_json_roundtrip(tmp_path):
    m = schubert_model(SchubertIndex(2, 4, 5))
    path = tmp_path / "m.json"
    path.write_text(json.dumps(m.to_json()))
    back = ModelSpec.load(str(path))
    assert back.n == 5 and back.equations == m.equations
    assert [[str(f) for f in r] for r in back.parametric.rows] == [[str(f) for f in r] for r in m.parametric.rows]


def test_resolve_unknown_family():
    with pytest.raises(ValueError, match="known"):
        resolve_model("veronese:2")
    assert set(FAMILIES) >= {"schubert", "chow-toric", "ci"}
