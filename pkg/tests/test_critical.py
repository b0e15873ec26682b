import math
import random

import numpy as np
import pytest

from linedist.critical import (DataPoint, augmented_jacobian, build_system, critical_count, degree_report,
                               extraneous_dimension, extraneous_ideal, extraneous_system, grassmannian_chart,
                               is_ed_general, lagrangian_ideal, plucker_objective)
from linedist.degrees import param_ed_bound
from linedist.exactalg import GF, MultiPoly, Ring, matmul, trace
from linedist.groebner import contains
from linedist.grasscore import chordal_distance, random_projection, random_rank2_skew, square_and_project
from linedist.models import (ModelSpec, Parametrization, SchubertIndex, generic_ci_model, grassmannian_model,
                             random_dense_poly, schubert_model, toric_model)

P = 32003


def test_objective_is_four_minus_chordal():
    rng = np.random.default_rng(0)
    data = DataPoint.generic(4, 0)
    Qnum = np.array(data.Q, dtype=float)
    num, den = plucker_objective(4, data)
    for _ in range(10):
        X = random_rank2_skew(4, rng).X
        iu = np.triu_indices(4, 1)
        point = list(X[iu])
        phi = 2 * num.evaluate_float(point) / den.evaluate_float(point)
        assert math.isclose(phi, 2 * np.trace(X @ X @ Qnum) / np.trace(X @ X), rel_tol=1e-10)
    # phi = trace(P Q) with P = 2X^2/trace(X^2), so chordal distance = 4 - 2 phi
    Q = random_projection(4, rng)
    X = random_rank2_skew(4, rng).X
    phi = 2 * np.trace(X @ X @ Q.P) / np.trace(X @ X)
    assert math.isclose(chordal_distance(square_and_project(X), Q), 4 - 2 * phi, abs_tol=1e-12)


def test_augmented_jacobian_shape_and_rank():
    model = generic_ci_model(4, [1, 1], seed=0)
    A = augmented_jacobian(model, DataPoint.generic(4, 0, GF(P)), GF(P))
    assert (A.rows, A.cols) == (2 + 3, 6)      # objective rows plus Pfaffian and two equations
    assert model.codim == 3
    sys = lagrangian_ideal(model, DataPoint.generic(4, 0, GF(P)), GF(P))
    assert sys.projective and [s[0] for s in sys.saturate_by] == ["singular"]


@pytest.mark.parametrize("model, kind, expected", [
    (grassmannian_model(4), "ed", 6),
    (schubert_model(SchubertIndex(1, 3, 4)), "ed", 10),
    (schubert_model(SchubertIndex(1, 3, 4)), "gd", 2),
    (generic_ci_model(4, [1, 1], 0), "ed", 12),
    (generic_ci_model(4, [1, 1, 2], 0), "ed", 16),
    (toric_model("tangent", (1, 2, 3)), "ed", 14),
    (toric_model("tangent", (1, 2, 3)), "gd", 14),
    (toric_model("tangent", (1, 2, 3)), "sd", 14),
])
def test_counts(model, kind, expected):
    pc = critical_count(model, kind, 0, P)
    assert pc.distinct == pc.total == expected


def test_routes_agree_on_schubert_threefold():
    model = schubert_model(SchubertIndex(1, 3, 4))
    counts = {critical_count(model, "ed", 1, P, route=r, formulation=f).distinct
              for r, f in [("implicit", "multiplier"), ("parametric", "multiplier"), ("parametric", "minors")]}
    assert counts == {10}


def test_gd_saturates_by_cut_locus():
    sys = build_system(schubert_model(SchubertIndex(1, 3, 4)), "gd", 0, GF(P), route="implicit")
    assert [s[0] for s in sys.saturate_by][-2:] == ["trace(X^2)", "trace(XY)"]
    sd = build_system(schubert_model(SchubertIndex(1, 3, 4)), "sd", 0, GF(P), route="implicit")
    assert sd.kind == "sd" and sd.saturate_by[-1][0] == "trace(XY)"


def test_degree_sandwich_on_schubert():
    model = schubert_model(SchubertIndex(1, 3, 4))
    gd, sd, ed = (critical_count(model, k, 0, P, route="implicit").distinct for k in ("gd", "sd", "ed"))
    assert gd <= sd <= ed
    assert (gd, sd, ed) == (2, 4, 10)


@pytest.mark.parametrize("u", [(1, 2, 3), (1, 2, 4)])
def test_parametric_bound_for_tangent_curves(u):
    model = toric_model("tangent", u)
    d = max(f.total_degree() for f in model.parametric.plucker())
    assert critical_count(model, "ed", 0, P).distinct <= int(param_ed_bound(d, 1))


def _generic_cubic_linear_model(s, seed):
    """Rows (1, a12, a13, a14), (0, 1, a23, a24): cubic a1k, linear a2k, dense random coefficients."""
    R = Ring([f"t{k}" for k in range(1, s + 1)])
    rng = random.Random(seed)

    def dense(d):
        f = MultiPoly.zero(R)
        for k in range(d + 1):
            f = f + random_dense_poly(R, k, rng)
        return f
    one, zero = MultiPoly.constant(1, R), MultiPoly.zero(R)
    rows = [[one, dense(3), dense(3), dense(3)], [zero, one, dense(1), dense(1)]]
    return ModelSpec(4, "generic-param", parametric=Parametrization(R, rows))


@pytest.mark.parametrize("s, bound", [(1, 14), (2, 147)])
def test_parametric_bound_is_attained(s, bound):
    model = _generic_cubic_linear_model(s, seed=s)
    d = max(f.total_degree() for f in model.parametric.plucker())
    assert d == 4 and param_ed_bound(d, s).value == bound
    assert critical_count(model, "ed", 0, P).distinct == bound


def test_degree_report_stable_across_seeds_and_primes():
    rep = degree_report(schubert_model(SchubertIndex(2, 3, 4)), "ed")
    assert len(rep.counts) == 4
    assert rep.stable and rep.value == 3 and rep.radical


def test_data_points():
    g = DataPoint.grassmann(5, 3)
    Y = np.array(g.Y, dtype=float)
    assert np.allclose(Y @ Y, np.array(g.Q, dtype=float))
    assert np.linalg.matrix_rank(Y) == 2
    s = DataPoint.square(4, 3)
    Z = np.array(s.Y, dtype=float)
    assert np.linalg.matrix_rank(Z) == 4
    q = DataPoint.generic(4, 2)
    assert q.Q == DataPoint.generic(4, 2).Q and all(q.Q[i][j] == q.Q[j][i] for i in range(4) for j in range(4))
    assert DataPoint.generic(4, 2, GF(P)).Q != DataPoint.generic(4, 3, GF(P)).Q


def test_extraneous_locus_n4():
    assert extraneous_dimension(4) == 2


def test_extraneous_points_lie_on_cut_locus():
    sys = extraneous_system(4, 0, GF(P))
    I = extraneous_ideal(4, 0, GF(P))
    X = [[f.reduce_mod(P).to_ring(I.ring) for f in row] for row in grassmannian_chart(4).skew()]
    txy = trace(matmul(X, sys.extra_y.y_matrix(I.ring, GF(P))))
    assert not txy.is_constant()
    assert contains(I, txy)


@pytest.mark.parametrize("model, general", [
    (generic_ci_model(4, [1, 1, 1], 0), True),
    (generic_ci_model(4, [1, 1], 0), True),
    (generic_ci_model(4, [2], 0), False),
    (toric_model("tangent", (1, 2, 3)), True),
    (toric_model("tangent", (1, 3, 4)), False),
])
def test_ed_generality(model, general):
    assert is_ed_general(model).general is general


def test_unknown_kind_and_route():
    with pytest.raises(ValueError):
        build_system(grassmannian_model(4), "xd")
    with pytest.raises(ValueError):
        build_system(grassmannian_model(4), "ed", route="bogus")
