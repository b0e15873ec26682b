import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from linedist.exactalg import GF
from linedist.grasscore import (DegenerateInput, MetricId, invariant_plane_critical_points,
                                projector_onto, random_projection, spectral_pair)
from linedist.critical import build_system, count_critical
from linedist.models import SchubertIndex, grassmannian_model, schubert_chart, schubert_model, toric_model
from linedist.spectral import (EXAMPLE_Q, ModelObjective, example_quartic, example_surface, fiber_count,
                               finite_difference_gradient, is_snug, minimize_model, parametric_rank_residual,
                               region_boundary, sample_region, schubert_curve_minimizer,
                               schubert_curve_quadratic, schubert_snug_minimizer, snug_bounds)

QT = np.array(EXAMPLE_Q, dtype=float)
LAM = (3 + math.sqrt(3)) / 5
MU = (3 - math.sqrt(3)) / 5

FAMILIES = {
    "schubert-surface": example_surface(),
    "schubert-threefold": schubert_model(SchubertIndex(1, 3, 5)),
    "chow": toric_model("chow", (1, 2, 3)),
    "secant": toric_model("secant", (1, 2, 3)),
    "tangent": toric_model("tangent", (1, 2, 4)),
}


@pytest.mark.parametrize("family", list(FAMILIES))
@pytest.mark.parametrize("metric", list(MetricId))
def test_gradient_matches_finite_differences(family, metric):
    model = FAMILIES[family]
    Q = QT if model.n == 5 else random_projection(model.n, np.random.default_rng(1)).P
    obj = ModelObjective(model.parametric, Q, metric)
    rng = np.random.default_rng(hash((family, metric.value)) % 2**32)
    for _ in range(50):
        t = rng.standard_normal(len(model.parametric.params))
        _, g = obj.value_and_grad(t)
        fd = finite_difference_gradient(obj, t)
        assert np.abs(g - fd).max() <= 1e-6 * max(1.0, np.abs(g).max())


@pytest.fixture(scope="module")
def metric_minimizers():
    return {m: minimize_model(example_surface(), QT, m) for m in MetricId}


def test_example_chordal_minimizer(metric_minimizers):
    r = metric_minimizers[MetricId.CHORDAL]
    assert abs(r.value - 8 / 5) < 1e-9
    assert abs(r.spectral.lam - LAM) < 1e-9 and abs(r.spectral.mu - MU) < 1e-9
    assert np.allclose(r.params, [1, 1], atol=1e-8)      # x25 = x35 = x45
    assert abs(metric_minimizers[MetricId.GEODESIC].spectral.lam - LAM) > 1e-3


def test_example_metric_minimizers_on_quartic(metric_minimizers):
    q = example_quartic()
    pairs = set()
    for r in metric_minimizers.values():
        assert abs(q.evaluate_float([r.spectral.lam, r.spectral.mu])) < 1e-6
        pairs.add((round(r.spectral.lam, 6), round(r.spectral.mu, 6)))
    assert len(pairs) == 5


def test_metrics_depending_on_sum_agree(metric_minimizers):
    # chordal and Procrustes pick different points, but chordal maximizes lambda + mu
    best = metric_minimizers[MetricId.CHORDAL].spectral
    for r in metric_minimizers.values():
        assert r.spectral.lam + r.spectral.mu <= best.lam + best.mu + 1e-9


def test_example_boundary_is_the_quartic():
    br = region_boundary(example_surface(), EXAMPLE_Q)
    q = example_quartic()
    curve = br.components[0]
    ratios = {Fraction(curve.coeffs()[m]) / Fraction(c) for m, c in q.coeffs().items()}
    assert len(ratios) == 1 and set(curve.coeffs()) == set(q.coeffs())
    lines = {str(c) for c in br.components[1:]}
    assert {"5*lam - 3", "5*mu - 3"} <= lines


def test_region_samples():
    rs = sample_region(example_surface(), QT, N=2000, seed=0)
    A = rs.array()
    assert A[:, 0].max() <= 1 + 1e-12 and A[:, 1].max() <= 2 / 5 + 1e-12
    assert A[:, 0].min() >= 3 / 5 - 1e-12 and A[:, 1].min() >= -1e-12
    assert np.all(A[:, 0] >= A[:, 1])
    # the quartic touches lambda = 1 at mu = 1/7 and mu = 2/5 at lambda = 16/25; past the chord
    # between these points the region lies inside the quartic
    q = example_quartic()
    p1, p2 = np.array([1, 1 / 7]), np.array([16 / 25, 2 / 5])
    normal = np.array([p1[1] - p2[1], p2[0] - p1[0]])
    corner = np.sign((np.array([1, 2 / 5]) - p1) @ normal)
    beyond = np.sign((A - p1) @ normal) == corner
    assert beyond.sum() > 100
    assert all(q.evaluate_float(list(p)) < 1e-9 for p in A[beyond])


def test_region_csv(tmp_path):
    rs = sample_region(example_surface(), QT, N=10, seed=1)
    path = tmp_path / "region.csv"
    rs.to_csv(str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "lambda,mu" and len(lines) == 11


def test_fiber_count_is_four():
    assert fiber_count(example_surface(), EXAMPLE_Q, (Fraction(4, 5), Fraction(1, 5))) == 4


def test_full_grassmannian_projection_data():
    rng = np.random.default_rng(7)
    for k in range(20):
        n = 4 + k % 2
        Qt = random_projection(n, rng)
        r = minimize_model(grassmannian_model(n), Qt, seed=k)
        w, V = np.linalg.eigh(Qt.P)
        top = V[:, -2:] @ V[:, -2:].T
        assert np.abs(r.P.P - top).max() < 1e-9


def test_full_grassmannian_distinct_eigenvalues():
    rng = np.random.default_rng(8)
    for k in range(5):
        n = 4 + k % 2
        V, _ = np.linalg.qr(rng.standard_normal((n, n)))
        Q = V @ np.diag(rng.uniform(0.05, 0.95, n)) @ V.T
        r = minimize_model(grassmannian_model(n), Q, seed=k)
        assert np.abs(r.P.P - invariant_plane_critical_points(Q)[0].P).max() < 1e-9


def _snug_cases():
    return list(combinations(range(1, 6), 2))


@pytest.mark.parametrize("i, j", _snug_cases())
def test_snug_bounds_hold(i, j):
    rng = np.random.default_rng(10 * i + j)
    s = SchubertIndex(i, j, 5)
    par = schubert_chart(s)
    for _ in range(10):
        Qt = random_projection(5, rng)
        lb, mb = snug_bounds(s, Qt)
        obj = ModelObjective(par, Qt, MetricId.CHORDAL)
        for _ in range(100):
            sp = obj.spectral(rng.standard_cauchy(len(par.params)))
            assert sp.lam <= lb + 1e-12 and sp.mu <= mb + 1e-12


@pytest.mark.parametrize("i, j", _snug_cases())
def test_snug_attainment(i, j):
    rng = np.random.default_rng(100 + 10 * i + j)
    s = SchubertIndex(i, j, 5)
    B = rng.standard_normal((2, 5))
    Qt = projector_onto(B.T)
    lb, mb = snug_bounds(s, Qt)
    r = minimize_model(schubert_model(s), Qt, starts=16)
    attained = abs(r.spectral.lam - lb) < 1e-7 and abs(r.spectral.mu - mb) < 1e-7
    assert attained is is_snug(s)
    if is_snug(s):
        P = schubert_snug_minimizer(s, B)
        sp = spectral_pair(P, Qt)
        assert abs(sp.lam - lb) < 1e-9 and abs(sp.mu - mb) < 1e-9
        assert np.abs(P.P - r.P.P).max() < 1e-8
    else:
        with pytest.raises(ValueError):
            schubert_snug_minimizer(s, B)


def test_snug_s23_in_gr24_and_s12():
    B = np.array([[0.3, 1.0, 0.0, 2.0], [-1.2, 0.0, 1.0, 0.5]])
    Qt = projector_onto(B.T)
    P = schubert_snug_minimizer(SchubertIndex(2, 3, 4), B)
    assert np.allclose(P.P[0], 0) and np.allclose(P.P[:, 0], 0)
    # the minimizer is the projection of the data plane onto coordinates 2..4
    assert np.allclose(P.P, projector_onto(np.vstack([np.zeros(2), B[:, 1:].T])).P, atol=1e-12)
    assert np.allclose(schubert_snug_minimizer(SchubertIndex(1, 2, 4), B).P, Qt.P, atol=1e-12)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_curve_minimizer(n):
    rng = np.random.default_rng(n)
    B = rng.standard_normal((2, n))
    B[:, n - 3], B[:, n - 1] = [1, 0], [0, 1]
    crit = schubert_curve_minimizer(B)
    assert len(crit) == 2
    s = SchubertIndex(n - 2, n, n)
    Qt = projector_onto(B.T)
    for c in crit:
        assert parametric_rank_residual(schubert_chart(s), Qt, [c.t]) < 1e-8
        a2, a1, a0 = schubert_curve_quadratic(B)
        assert abs(a2 * c.t ** 2 + a1 * c.t + a0) < 1e-9 * max(1, abs(a1))
    r = minimize_model(schubert_model(s), Qt, starts=16)
    assert np.abs(r.P.P - crit[0].result.P.P).max() < 1e-8


def test_curve_degenerate_data():
    # bc = 0 and beta = 0 kill both a2 and a0: only the root t = 0 survives
    B = np.array([[0.0, 1.0, 0.0, 0.0], [0.5, 0.0, 0.8, 1.0]])
    a2, a1, a0 = schubert_curve_quadratic(B)
    assert a2 == 0 and a0 == 0 and a1 != 0
    with pytest.raises(DegenerateInput):
        schubert_curve_minimizer(B)


def test_curve_requires_normal_form():
    with pytest.raises(ValueError):
        schubert_curve_quadratic(np.ones((2, 5)))


def test_curve_gd_count_is_two():
    model = schubert_model(SchubertIndex(3, 5, 5))
    assert count_critical(build_system(model, "gd", 0, GF(32003))).distinct == 2


def test_critical_point_certification():
    # every numeric minimizer is a root of the exact parametric system (rank-one trace matrix)
    model = example_surface()
    r = minimize_model(model, QT, MetricId.CHORDAL)
    assert parametric_rank_residual(model.parametric, QT, r.params) < 1e-8


def test_degenerate_inputs():
    obj = ModelObjective(example_surface().parametric, QT, MetricId.CHORDAL)
    with pytest.raises(DegenerateInput):
        ModelObjective(example_surface().parametric, -np.eye(5), MetricId.CHORDAL)
    assert math.isfinite(obj.value(np.array([1.0, 1.0])))
