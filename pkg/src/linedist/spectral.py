"""Numeric side: multi-start minimization over parametrized models, spectral regions,
their algebraic boundary, and closed-form minimizers for snug Schubert varieties."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize

from .exactalg import QQ, MultiPoly, PolyMatrix, Ring, matmul, minors, trace
from .grasscore import (DegenerateInput, MetricId, ProjMatrix, SpectralSample, coordinate_projector,
                        metric_value, projector_onto)
from .groebner import Budget, IdealHandle, count_points, eliminate, groebner_basis, saturate
from .models import ModelSpec, Parametrization, SchubertIndex, schubert_chart, schubert_model

ROOT_TOL = 1e-15


# ---------------------------------------------------------------------------
# compiled parametrizations


class CompiledParam:
    """Fast float evaluation of the two rows of a parametrization and their derivatives."""

    def __init__(self, par: Parametrization):
        self.par = par
        self.s = len(par.params)
        self.n = par.n
        self._entries = []
        for row in par.rows:
            for f in row:
                items = list(f.coeffs().items())
                exps = np.array([f.ring.unpack(m) for m, _ in items], dtype=float).reshape(len(items), self.s)
                cs = np.array([float(c) for _, c in items], dtype=float)
                self._entries.append((exps, cs))

    def rows(self, t: np.ndarray) -> np.ndarray:
        out = np.empty(2 * self.n)
        for k, (E, C) in enumerate(self._entries):
            out[k] = C @ np.prod(t ** E, axis=1) if C.size else 0.0
        return out.reshape(2, self.n)

    def rows_and_derivatives(self, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        vals = np.zeros(2 * self.n)
        ders = np.zeros((self.s, 2 * self.n))
        for k, (E, C) in enumerate(self._entries):
            if not C.size:
                continue
            mono = np.prod(t ** E, axis=1)
            vals[k] = C @ mono
            for a in range(self.s):
                ea = E[:, a]
                mask = ea > 0
                if not mask.any():
                    continue
                Ed = E[mask].copy()
                Ed[:, a] -= 1
                ders[a, k] = (C[mask] * ea[mask]) @ np.prod(t ** Ed, axis=1)
        return vals.reshape(2, self.n), ders.reshape(self.s, 2, self.n)


def _skew(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.outer(a, b) - np.outer(b, a)


def projection_of_rows(rows: np.ndarray) -> np.ndarray:
    X = _skew(rows[0], rows[1])
    S = X @ X
    tr = np.trace(S)
    if abs(tr) < 1e-300:
        raise DegenerateInput("rows span less than a plane")
    return 2 * S / tr


def _psd_sqrt(Q: np.ndarray) -> np.ndarray:
    w, V = np.linalg.eigh((Q + Q.T) / 2)
    if w.min() < -1e-9 * max(1.0, abs(w).max()):
        raise DegenerateInput("data matrix must be positive semidefinite")
    return (V * np.sqrt(np.clip(w, 0, None))) @ V.T


# ---------------------------------------------------------------------------
# metric gradients in (lambda, mu)


def _acos_sqrt_sq_derivative(x: float) -> float:
    """d/dx acos(sqrt(x))^2."""
    if x >= 1 - 1e-14:
        return -1.0 / math.sqrt(max(x, 1e-300))
    x = max(x, 1e-300)
    return -math.acos(math.sqrt(x)) / math.sqrt(x * (1 - x))


def metric_gradient(metric: MetricId, lam: float, mu: float) -> tuple[float, float]:
    lam = min(max(lam, 1e-300), 1.0)
    mu = min(max(mu, 1e-300), 1.0)
    if metric is MetricId.CHORDAL:
        return -2.0, -2.0
    if metric is MetricId.GEODESIC:
        return _acos_sqrt_sq_derivative(lam), _acos_sqrt_sq_derivative(mu)
    if metric is MetricId.PROCRUSTES:
        return -1 / math.sqrt(lam), -1 / math.sqrt(mu)
    if metric is MetricId.BINET_CAUCHY:
        return -mu, -lam
    if metric is MetricId.FUBINI_STUDY:
        g = _acos_sqrt_sq_derivative(lam * mu)
        return g * mu, g * lam
    if metric is MetricId.MARTIN:
        return -1 / lam, -1 / mu
    if metric is MetricId.ASIMOV:
        return 0.0, _acos_sqrt_sq_derivative(mu)
    if metric is MetricId.PROJECTION:
        return 0.0, -1.0
    if metric is MetricId.SPECTRAL:
        return 0.0, -1 / math.sqrt(mu)
    raise ValueError(metric)


# ---------------------------------------------------------------------------
# objective on a parametrized model


class ModelObjective:
    """Squared metric distance from the model point at parameters t to the data Q."""

    def __init__(self, par: Parametrization, Q, metric: MetricId):
        self.cp = CompiledParam(par)
        Qm = np.asarray(Q.P if isinstance(Q, ProjMatrix) else Q, dtype=float)
        self.Q = (Qm + Qm.T) / 2
        self.R = _psd_sqrt(self.Q)
        self.metric = metric

    def projection(self, t) -> np.ndarray:
        return projection_of_rows(self.cp.rows(np.asarray(t, dtype=float)))

    def spectral(self, t) -> SpectralSample:
        P = self.projection(t)
        w = np.linalg.eigvalsh(self.R @ P @ self.R)
        return SpectralSample(float(w[-1]), float(w[-2]))

    def value(self, t) -> float:
        return metric_value(self.metric, self.spectral(t))

    def value_and_grad(self, t) -> tuple[float, np.ndarray]:
        t = np.asarray(t, dtype=float)
        rows, drows = self.cp.rows_and_derivatives(t)
        a, b = rows
        X = _skew(a, b)
        S = X @ X
        tr = np.trace(S)
        if not np.isfinite(tr) or abs(tr) < 1e-300:
            return math.inf, np.zeros_like(t)
        P = 2 * S / tr
        M = self.R @ P @ self.R
        w, V = np.linalg.eigh((M + M.T) / 2)
        lam, mu = float(w[-1]), float(w[-2])
        vl, vm = self.R @ V[:, -1], self.R @ V[:, -2]
        val = metric_value(self.metric, SpectralSample(lam, mu))
        gl, gm = metric_gradient(self.metric, lam, mu)
        grad = np.empty_like(t)
        for k in range(len(t)):
            da, db = drows[k]
            dX = _skew(da, b) + _skew(a, db)
            dS = dX @ X + X @ dX
            dP = 2 * (dS * tr - S * np.trace(dS)) / tr ** 2
            grad[k] = gl * (vl @ dP @ vl) + gm * (vm @ dP @ vm)
        return val, grad


def finite_difference_gradient(obj: ModelObjective, t, h: float = 1e-6) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    g = np.empty_like(t)
    for k in range(len(t)):
        e = np.zeros_like(t)
        e[k] = h
        g[k] = (obj.value(t + e) - obj.value(t - e)) / (2 * h)
    return g


def newton_polish(obj: ModelObjective, t, steps: int = 6, h: float = 1e-5) -> np.ndarray:
    """Newton steps on the analytic gradient (Hessian by central differences of the
    gradient). BFGS stops once the value stalls, which leaves parameter errors near
    the square root of machine precision; a few Newton steps remove them."""
    t = np.asarray(t, dtype=float).copy()
    val, g = obj.value_and_grad(t)
    for _ in range(steps):
        gn = np.linalg.norm(g)
        if gn == 0 or not np.isfinite(gn):
            break
        H = np.empty((len(t), len(t)))
        for k in range(len(t)):
            e = np.zeros_like(t)
            e[k] = h * max(1.0, abs(t[k]))
            H[:, k] = (obj.value_and_grad(t + e)[1] - obj.value_and_grad(t - e)[1]) / (2 * e[k])
        H = (H + H.T) / 2
        try:
            step = np.linalg.lstsq(H, g, rcond=1e-12)[0]
        except np.linalg.LinAlgError:
            break
        cand = t - step
        cval, cg = obj.value_and_grad(cand)
        if not np.isfinite(cval) or cval > val + 1e-14 * max(1.0, abs(val)) or np.linalg.norm(cg) >= gn:
            break
        t, val, g = cand, cval, cg
    return t


@dataclass
class OptResult:
    params: np.ndarray
    P: ProjMatrix
    value: float
    metric: MetricId
    spectral: SpectralSample
    starts: int
    converged: int

    def to_json(self) -> dict:
        return {"metric": self.metric.value, "value": self.value,
                "lambda": self.spectral.lam, "mu": self.spectral.mu,
                "params": [float(x) for x in self.params],
                "projection": (np.round(self.P.P, 15) + 0.0).tolist(),
                "starts": self.starts, "converged": self.converged}


def _parametrization(model) -> Parametrization:
    if isinstance(model, Parametrization):
        return model
    if model.parametric is None:
        raise ValueError(f"model {model.name} has no parametrization; numeric minimization needs one")
    return model.parametric


def minimize_model(model, Q, metric: MetricId = MetricId.CHORDAL, starts: int = 64, seed: int = 0,
                   gtol: float = 1e-12, maxiter: int = 200) -> OptResult:
    """Best local minimum of BFGS runs from Cauchy-distributed starting parameters."""
    par = _parametrization(model)
    obj = ModelObjective(par, Q, metric)
    s = len(par.params)
    if s == 0:
        t = np.zeros(0)
        spec = obj.spectral(t)
        return OptResult(t, ProjMatrix(obj.projection(t)), metric_value(metric, spec), metric, spec, 0, 0)
    rng = np.random.default_rng(seed)
    best = None
    converged = 0
    for _ in range(starts):
        t0 = rng.standard_cauchy(s)
        with np.errstate(all="ignore"):
            res = minimize(obj.value_and_grad, t0, jac=True, method="BFGS",
                           options={"gtol": gtol, "maxiter": maxiter})
        if not np.all(np.isfinite(res.x)) or not np.isfinite(res.fun):
            continue
        converged += 1
        key = (round(float(res.fun), 12), tuple(np.round(res.x, 9)))
        if best is None or key < best[0]:
            best = (key, res.x)
    if best is None:
        raise RuntimeError("no start produced a finite objective value")
    t = newton_polish(obj, best[1])
    spec = obj.spectral(t)
    return OptResult(t, ProjMatrix(obj.projection(t)), metric_value(metric, spec), metric, spec,
                     starts, converged)


# ---------------------------------------------------------------------------
# spectral region


@dataclass
class RegionSample:
    points: list[SpectralSample]
    model: str
    data: np.ndarray

    def array(self) -> np.ndarray:
        return np.array([[p.lam, p.mu] for p in self.points])

    def to_csv(self, path: str):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["lambda", "mu"])
            for p in self.points:
                w.writerow([repr(p.lam), repr(p.mu)])


def sample_region(model, Q, N: int = 1000, seed: int = 0) -> RegionSample:
    """Spectral pairs of N random model points (heavy-tailed parameter draws)."""
    par = _parametrization(model)
    obj = ModelObjective(par, Q, MetricId.CHORDAL)
    rng = np.random.default_rng(seed)
    s = len(par.params)
    pts = []
    while len(pts) < N:
        t = rng.standard_cauchy(s) if rng.random() < 0.5 else rng.standard_normal(s)
        try:
            pts.append(obj.spectral(t))
        except DegenerateInput:
            continue
    name = getattr(model, "name", "parametrization")
    return RegionSample(pts, name, np.asarray(Q.P if isinstance(Q, ProjMatrix) else Q))


def _exact_matrix(Q, ring: Ring) -> list[list[MultiPoly]]:
    return [[MultiPoly.constant(Fraction(c), ring, QQ) for c in row] for row in Q]


def spectral_invariants(par: Parametrization, Q, ring: Ring):
    """Polynomials f1, f2, den with lambda + mu = f1/den and lambda * mu = f2/den^2."""
    X = [[f.to_ring(ring) for f in row] for row in par.skew()]
    S = matmul(X, X)
    den = trace(S)
    SQ = matmul(S, _exact_matrix(Q, ring))
    t1 = trace(SQ)
    f1 = t1.scale(2)
    f2 = (t1 * t1 - trace(matmul(SQ, SQ))).scale(2)
    return f1, f2, den


def _to_lambda_mu(g: MultiPoly) -> MultiPoly:
    """Substitute E1 = lambda + mu, E2 = lambda * mu."""
    R = Ring(["lam", "mu"])
    lam, mu = MultiPoly.var("lam", R), MultiPoly.var("mu", R)
    return g.substitute({"E1": lam + mu, "E2": lam * mu}, R)


@dataclass
class BoundaryResult:
    """Branch locus of the spectral map: the eliminant and its split into components.

    ``components`` holds the primitive part (no univariate factors) followed by the
    univariate factors in lam and in mu, rational linear factors split off."""

    eliminant: MultiPoly
    components: list[MultiPoly]

    @property
    def curves(self) -> list[MultiPoly]:
        return [c for c in self.components if len(c.variables()) == 2]


def region_boundary(model, Q, budget: Budget | None = None) -> BoundaryResult:
    """Branch locus of the model -> spectral-pair map, as a polynomial in (lam, mu).

    The map is written through the symmetric functions E1 = lambda + mu and
    E2 = lambda * mu, which are rational in the parameters; the branch locus is
    where the 2 x s Jacobian of (E1, E2) drops rank.
    """
    par = _parametrization(model)
    params = par.params
    ring = par.ring.extend(["E1", "E2"], front=True)
    f1, f2, den = spectral_invariants(par, Q, ring)
    E1, E2 = MultiPoly.var("E1", ring), MultiPoly.var("E2", ring)
    rows = []
    for f, k in ((f1, 1), (f2, 2)):
        rows.append([den * f.diff(t) - (f * den.diff(t)).scale(k) for t in params])
    gens = [den * E1 - f1, den * den * E2 - f2]
    if len(params) >= 2:
        gens += [m for m in minors(PolyMatrix(rows), 2) if not m.is_zero()]
    I = saturate(IdealHandle(gens, ring, QQ), den, budget)
    elim = groebner_basis(eliminate(I, params, budget))
    polys = [_to_lambda_mu(g) for g in elim.gens]
    polys = [g for g in polys if not g.is_constant()]
    if len(polys) != 1:
        raise ValueError(f"expected a principal eliminant, got {len(polys)} generators")
    F = _primitive(polys[0])
    return BoundaryResult(F, split_bivariate(F))


def _primitive(f: MultiPoly) -> MultiPoly:
    return MultiPoly.from_coeffs(f.primitive_integer_terms(), f.ring)


def _coeffs_in(f: MultiPoly, var: str) -> dict[int, list]:
    """f as a polynomial in the other variable with coefficients univariate in ``var``."""
    k = f.ring.index[var]
    other = 1 - k
    out: dict[int, list] = {}
    for m, c in f.coeffs().items():
        e = f.ring.unpack(m)
        row = out.setdefault(e[other], [])
        row.extend([0] * (e[k] + 1 - len(row)))
        row[e[k]] += c
    return out


def _univariate(coeffs: list, var: str, ring: Ring) -> MultiPoly:
    x = MultiPoly.var(var, ring)
    out = MultiPoly.zero(ring)
    for i, c in enumerate(coeffs):
        if c:
            out = out + (x ** i).scale(c)
    return out


def _rational_linear_factors(coeffs: list) -> tuple[list, list]:
    """Split rational roots off a univariate polynomial (ascending coefficients)."""
    from .linalg_modp import poly_divmod, poly_trim
    c = poly_trim([Fraction(x) for x in coeffs], 0)
    roots = []
    while len(c) > 1:
        den = 1
        for x in c:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in c]
        if ints[0] == 0:
            roots.append(Fraction(0))
            c = c[1:]
            continue
        found = None
        a0, an = abs(ints[0]), abs(ints[-1])
        for p in _divisors(a0):
            for q in _divisors(an):
                for r in (Fraction(p, q), Fraction(-p, q)):
                    if sum(ci * r ** i for i, ci in enumerate(c)) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        c, _ = poly_divmod(c, [-found, Fraction(1)], 0)
    return roots, c


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def split_bivariate(F: MultiPoly) -> list[MultiPoly]:
    """Primitive part of F in (lam, mu) followed by its univariate content factors."""
    from .linalg_modp import poly_divmod, poly_gcd
    ring = F.ring
    factors = []
    rest = F
    for var in ring.names:
        cols = _coeffs_in(rest, var)
        g = None
        for coeffs in cols.values():
            g = coeffs if g is None else poly_gcd(g, coeffs, 0)
        if g is None or len(g) <= 1:
            continue
        new = MultiPoly.zero(ring)
        x_other = MultiPoly.var(ring.names[1 - ring.index[var]], ring)
        for e, coeffs in cols.items():
            q, r = poly_divmod(coeffs, g, 0)
            assert not r
            new = new + _univariate(q, var, ring) * x_other ** e
        rest = new
        roots, leftover = _rational_linear_factors(g)
        x = MultiPoly.var(var, ring)
        for r in roots:
            factors.append(_primitive(x - MultiPoly.constant(r, ring)))
        if len(leftover) > 1:
            factors.append(_primitive(_univariate(leftover, var, ring)))
    return [_primitive(rest)] + factors


def fiber_count(model, Q, point: SpectralSample | tuple, prime: int | None = None) -> int:
    """Number of complex model points (in the parameter chart) over a spectral pair."""
    par = _parametrization(model)
    lam, mu = (Fraction(x) for x in point)
    f1, f2, den = spectral_invariants(par, Q, par.ring)
    e1 = MultiPoly.constant(lam + mu, par.ring)
    e2 = MultiPoly.constant(lam * mu, par.ring)
    ring = par.ring.extend(["_y"])
    gens = [(den * e1 - f1).to_ring(ring), (den * den * e2 - f2).to_ring(ring),
            MultiPoly.var("_y", ring) * den.to_ring(ring) - 1]
    I = IdealHandle(gens, ring, QQ)
    if prime:
        from .exactalg import GF
        I = IdealHandle([g.reduce_mod(prime) for g in gens], ring, GF(prime))
    return int(count_points(I))


# ---------------------------------------------------------------------------
# Schubert varieties: bounds and closed-form minimizers


def _plane_basis(Q) -> np.ndarray:
    Qm = np.asarray(Q.P if isinstance(Q, ProjMatrix) else Q, dtype=float)
    w, V = np.linalg.eigh((Qm + Qm.T) / 2)
    return V[:, -2:][:, ::-1]


def _top_eigs(M: np.ndarray, k: int) -> np.ndarray:
    w = np.linalg.eigvalsh((M + M.T) / 2)
    return w[::-1][:k]


def snug_bounds(s: SchubertIndex, Q) -> tuple[float, float]:
    """(lambda_1(Q E_i), min(lambda_2(Q E_i), lambda_1(Q E_j)))."""
    Qm = np.asarray(Q.P if isinstance(Q, ProjMatrix) else Q, dtype=float)
    Ei, Ej = coordinate_projector(s.n, s.i), coordinate_projector(s.n, s.j)
    li = _top_eigs(Ei @ Qm @ Ei, 2)
    lj = _top_eigs(Ej @ Qm @ Ej, 1)
    return float(li[0]), float(min(li[1], lj[0]))


def principal_vectors(U: np.ndarray, F: np.ndarray):
    """Principal vector pairs of two orthonormal bases (columns), most aligned first."""
    W, sig, Vt = np.linalg.svd(U.T @ F)
    return U @ W, F @ Vt.T, sig


def is_snug(s: SchubertIndex) -> bool:
    return s.i == 1 or s.j == s.i + 1


def schubert_snug_minimizer(s: SchubertIndex, B) -> ProjMatrix:
    """Closed-form chordal minimizer on a snug Schubert variety for data rows B.

    S_{i,i+1} (planes inside E_i): span of the principal vectors f1, f2 of E_i.
    S_{1j}, j > 2 (planes meeting E_j): span of f1 (from E_j) and q2.
    """
    if not is_snug(s):
        raise ValueError(f"{s} is not snug; no closed-form minimizer")
    B = np.asarray(B, dtype=float)
    U, _ = np.linalg.qr(B.T)
    n = s.n
    if s.j == s.i + 1:
        F = np.eye(n)[:, s.i - 1:]
        _, f, _ = principal_vectors(U, F)
        return projector_onto(f[:, :2])
    F = np.eye(n)[:, s.j - 1:]
    q, f, _ = principal_vectors(U, F)
    if F.shape[1] == 1:
        # one-dimensional E_n: q2 is the data direction orthogonal to q1
        q1 = q[:, 0]
        q2 = U[:, 1] if abs(U[:, 0] @ q1) > abs(U[:, 1] @ q1) else U[:, 0]
        q2 = q2 - (q2 @ q1) * q1
        q2 /= np.linalg.norm(q2)
        return projector_onto(np.column_stack([f[:, 0], q2]))
    return projector_onto(np.column_stack([f[:, 0], q[:, 1]]))


@dataclass
class CurveCritical:
    t: float
    result: OptResult


def schubert_curve_quadratic(B) -> tuple[float, float, float]:
    """Coefficients (a2, a1, a0) of the critical quadratic for S_{n-2,n}.

    B must have columns n-2 and n equal to (1, 0) and (0, 1); column n-1 holds (beta, gamma).
    """
    B = np.asarray(B, dtype=float)
    n = B.shape[1]
    if not (np.allclose(B[:, n - 3], [1, 0]) and np.allclose(B[:, n - 1], [0, 1])):
        raise ValueError("B must have unit columns at positions n-2 and n")
    b, c = B[0, :n - 3], B[1, :n - 3]
    beta, gamma = B[0, n - 2], B[1, n - 2]
    b2, bc, c2 = b @ b, b @ c, c @ c
    a2 = (-c2 - 1) * beta + bc * gamma
    a1 = (c2 + 1) * beta ** 2 - 2 * bc * beta * gamma + b2 * gamma ** 2 - c2 - 1
    a0 = (c2 + 1) * beta - bc * gamma
    return a2, a1, a0


def schubert_curve_minimizer(B, metric: MetricId = MetricId.CHORDAL) -> list[CurveCritical]:
    """Both critical points of S_{n-2,n}: rows e_{n-2} + t e_{n-1} and e_n."""
    a2, a1, a0 = schubert_curve_quadratic(B)
    if abs(a2) < 1e-12 * max(1.0, abs(a1), abs(a0)):
        raise DegenerateInput("leading coefficient vanishes")
    roots = np.roots([a2, a1, a0])
    B = np.asarray(B, dtype=float)
    n = B.shape[1]
    par = schubert_chart(SchubertIndex(n - 2, n, n))
    Qt = projector_onto(B.T)
    obj = ModelObjective(par, Qt, metric)
    out = []
    for t in sorted(roots, key=lambda z: (abs(z.imag), z.real)):
        if abs(t.imag) > 1e-9 * max(1.0, abs(t)):
            raise DegenerateInput("complex critical points")
        tv = np.array([t.real])
        spec = obj.spectral(tv)
        res = OptResult(tv, ProjMatrix(obj.projection(tv)), metric_value(metric, spec), metric, spec, 0, 0)
        out.append(CurveCritical(float(t.real), res))
    out.sort(key=lambda c: c.result.value)
    return out


def parametric_rank_residual(par: Parametrization, Q, t) -> float:
    """Second singular value (relative) of the 2 x (s+1) matrix [[num, dnum], [den, dden]] at t."""
    obj = ModelObjective(par, Q, MetricId.CHORDAL)
    t = np.asarray(t, dtype=float)
    rows, drows = obj.cp.rows_and_derivatives(t)
    a, b = rows
    X = _skew(a, b)
    S = X @ X
    num, den = np.trace(S @ obj.Q), np.trace(S)
    M = [[num], [den]]
    for k in range(len(t)):
        dX = _skew(drows[k][0], b) + _skew(a, drows[k][1])
        dS = dX @ X + X @ dX
        M[0].append(np.trace(dS @ obj.Q))
        M[1].append(np.trace(dS))
    sv = np.linalg.svd(np.array(M), compute_uv=False)
    return float(sv[-1] / sv[0]) if len(sv) > 1 else 0.0


# ---------------------------------------------------------------------------
# the Schubert surface example in Gr(2,5)

EXAMPLE_Q = [[Fraction(v, 10) for v in row] for row in
             ([6, 4, 2, 0, -2], [4, 3, 2, 1, 0], [2, 2, 2, 2, 2], [0, 1, 2, 3, 4], [-2, 0, 2, 4, 6])]


def example_surface() -> ModelSpec:
    return schubert_model(SchubertIndex(2, 5, 5))


def example_quartic() -> MultiPoly:
    from .exactalg import poly_parse
    return poly_parse("100*lam^2*mu^2 - 100*lam^2*mu + 49*lam^2 - 100*lam*mu^2 + 170*lam*mu"
                      " - 84*lam + 49*mu^2 - 84*mu + 36", Ring(["lam", "mu"]))
