"""Critical systems of the distance problem on a model M in Gr(2,n), and point counts.

Objective: phi_Q(X) = 2 trace(X^2 Q) / trace(X^2). Three routes build the
critical equations:

* implicit: rank condition on the augmented Jacobian [grad num; grad den; J_M]
  (all (c+2)-minors), saturated by the singular locus, by trace(X^2), and for
  Grassmann data also by trace(XY);
* parametric: rank-one condition on [[num, d num/dt], [den, d den/dt]], or the
  equivalent multiplier form grad num = nu grad den, num = nu den (same
  solutions off den = 0);
* chart: a parametric chart of a larger variety plus extra equations g_k,
  handled with Lagrange multipliers.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactalg import (GF, QQ, FieldTag, MultiPoly, PolyMatrix, Ring, jacobian, matmul,
                       minors, plucker_names, plucker_ring, skew_matrix, trace)
from .groebner import (Budget, BudgetExceeded, IdealHandle, PointCount, PositiveDimensionError,
                       count_points, ideal_dimension, saturate)
from .models import ModelSpec, Parametrization, SchubertIndex, grassmannian_generators, schubert_chart

DEFAULT_PRIMES = (32003, 65537)
DEFAULT_SEEDS = (0, 1)


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class DataPoint:
    """Exact symmetric data Q; Grassmann data also carries Y (rank 2) with Q = Y^2,
    square data carries a full-rank skew Z with Q = Z^2."""

    kind: str                       # "generic" | "grassmann" | "square"
    Q: tuple
    Y: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.Q)

    @staticmethod
    def _entry(rng: random.Random, field: FieldTag):
        if field.kind == "GF":
            return rng.randrange(field.p)
        return rng.randint(-50, 50)

    @classmethod
    def generic(cls, n: int, seed: int = 0, field: FieldTag = QQ) -> "DataPoint":
        rng = random.Random(f"generic:{n}:{seed}:{field}")
        Q = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                Q[i][j] = Q[j][i] = cls._entry(rng, field)
        return cls("generic", _freeze(Q))

    @classmethod
    def grassmann(cls, n: int, seed: int = 0, field: FieldTag = QQ, B=None) -> "DataPoint":
        rng = random.Random(f"grassmann:{n}:{seed}:{field}")
        if B is None:
            B = [[cls._entry(rng, field) for _ in range(n)] for _ in range(2)]
        Y = [[B[0][i] * B[1][j] - B[0][j] * B[1][i] for j in range(n)] for i in range(n)]
        return cls("grassmann", _freeze(_matmul_num(Y, Y)), _freeze(Y))

    @classmethod
    def square(cls, n: int, seed: int = 0, field: FieldTag = QQ) -> "DataPoint":
        rng = random.Random(f"square:{n}:{seed}:{field}")
        Z = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = cls._entry(rng, field)
                Z[i][j], Z[j][i] = v, -v
        return cls("square", _freeze(_matmul_num(Z, Z)), _freeze(Z))

    @classmethod
    def of_kind(cls, kind: str, n: int, seed: int, field: FieldTag) -> "DataPoint":
        return {"ed": cls.generic, "gd": cls.grassmann, "sd": cls.square}[kind](n, seed, field)

    def matrix(self, ring: Ring, field: FieldTag) -> list[list[MultiPoly]]:
        return [[MultiPoly.constant(c, ring, field) for c in row] for row in self.Q]

    def y_matrix(self, ring: Ring, field: FieldTag) -> list[list[MultiPoly]]:
        if self.Y is None:
            raise ValueError("data point carries no skew matrix")
        return [[MultiPoly.constant(c, ring, field) for c in row] for row in self.Y]


def _freeze(M):
    return tuple(tuple(r) for r in M)


def _matmul_num(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    return [[sum(A[i][l] * B[l][j] for l in range(k)) for j in range(m)] for i in range(n)]


# ---------------------------------------------------------------------------
# objective


def objective_traces(X: list[list[MultiPoly]], Q: list[list[MultiPoly]]) -> tuple[MultiPoly, MultiPoly]:
    """(trace(X^2 Q), trace(X^2)) for a symbolic skew matrix X."""
    X2 = matmul(X, X)
    return trace(matmul(X2, Q)), trace(X2)


def plucker_objective(n: int, data: DataPoint, field: FieldTag = QQ):
    R = plucker_ring(n)
    X = skew_matrix(R, n, field)
    return objective_traces(X, data.matrix(R, field))


# ---------------------------------------------------------------------------
# systems


@dataclass
class CriticalSystem:
    """Generators plus the saturations that turn them into a critical ideal.

    ``saturate_by`` holds (label, polynomials): a single polynomial means
    saturation by that polynomial, several mean saturation by the ideal they
    generate. ``projective`` marks ideals homogeneous in the Pluecker
    coordinates, counted on a random affine chart.
    """

    model: ModelSpec | None
    data: DataPoint
    kind: str                        # "lagrangian" | "ed" | "gd" | "parametric" | ...
    ideal: IdealHandle
    saturate_by: list[tuple[str, list[MultiPoly]]] = field(default_factory=list)
    projective: bool = False
    fiber_size: int = 1

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def field(self) -> FieldTag:
        return self.ideal.field

    def with_saturation(self, label: str, polys: Sequence[MultiPoly], kind: str | None = None) -> "CriticalSystem":
        return CriticalSystem(self.model, self.data, kind or self.kind, self.ideal,
                              self.saturate_by + [(label, list(polys))], self.projective, self.fiber_size)

    def saturated_ideal(self, budget: Budget | None = None, seed: int = 0) -> IdealHandle:
        """The saturated ideal itself (ideal saturations via a random combination of generators)."""
        I = self.ideal
        rng = random.Random(f"sat:{seed}")
        for _, polys in self.saturate_by:
            I = saturate(I, _combine(polys, rng, I.ring, I.field), budget)
        return I


def _combine(polys: Sequence[MultiPoly], rng: random.Random, ring: Ring, field: FieldTag) -> MultiPoly:
    if len(polys) == 1:
        return polys[0]
    top = field.p if field.kind == "GF" else 1000
    out = MultiPoly.zero(ring, field)
    for f in polys:
        out = out + f.scale(rng.randrange(1, top))
    return out


def model_generators(model: ModelSpec, field: FieldTag = QQ) -> list[MultiPoly]:
    if model.equations is None:
        raise ValueError(f"model {model.name} has no implicit representation")
    R = plucker_ring(model.n)
    eqs = [f.reduce_mod(field.p) if field.kind == "GF" else f for f in model.equations]
    return grassmannian_generators(model.n, field) + [f.to_ring(R) for f in eqs]


def augmented_jacobian(model: ModelSpec, Q, field: FieldTag = QQ) -> PolyMatrix:
    """Rows: gradient of trace(X^2 Q), gradient of trace(X^2), Jacobian of the generators."""
    n = model.n
    R = plucker_ring(n)
    X = skew_matrix(R, n, field)
    Qm = Q.matrix(R, field) if isinstance(Q, DataPoint) else Q
    num, den = objective_traces(X, Qm)
    names = plucker_names(n)
    gens = model_generators(model, field)
    rows = [[num.diff(v) for v in names], [den.diff(v) for v in names]]
    rows += [list(r) for r in jacobian(gens, names).entries]
    return PolyMatrix(rows)


def singular_locus_generators(model: ModelSpec, field: FieldTag = QQ) -> list[MultiPoly]:
    """c x c minors of the generator Jacobian."""
    gens = model_generators(model, field)
    JM = jacobian(gens, plucker_names(model.n))
    return [m for m in minors(JM, model.codim) if not m.is_zero()]


def lagrangian_ideal(model: ModelSpec, data: DataPoint, field: FieldTag = QQ) -> CriticalSystem:
    """(I_M + (c+2)-minors of the augmented Jacobian) : I_Sing^infinity."""
    c = model.codim
    A = augmented_jacobian(model, data, field)
    gens = model_generators(model, field)
    if c + 2 <= min(A.rows, A.cols):
        gens = gens + [m for m in minors(A, c + 2) if not m.is_zero()]
    I = IdealHandle(gens, plucker_ring(model.n), field)
    sys = CriticalSystem(model, data, "lagrangian", I, [], projective=True)
    sing = singular_locus_generators(model, field)
    if sing and not any(g.is_constant() for g in sing):
        sys = sys.with_saturation("singular", sing)
    return sys


def ed_critical_ideal(sys: CriticalSystem) -> CriticalSystem:
    """Saturate by trace(X^2)."""
    R = sys.ring
    den = trace(matmul(skew_matrix(R, sys.data.n, sys.field), skew_matrix(R, sys.data.n, sys.field)))
    return sys.with_saturation("trace(X^2)", [den], "ed")


def cut_critical_ideal(model: ModelSpec, data: DataPoint, field: FieldTag = QQ) -> CriticalSystem:
    """ED critical ideal further saturated by trace(XY), where Q = Y^2 (Y of any even rank)."""
    if data.Y is None:
        raise ValueError("special data Q = Y^2 needs its skew square root Y")
    sys = ed_critical_ideal(lagrangian_ideal(model, data, field))
    R = sys.ring
    X = skew_matrix(R, model.n, field)
    txy = trace(matmul(X, data.y_matrix(R, field)))
    return sys.with_saturation("trace(XY)", [txy], "gd" if data.kind == "grassmann" else "sd")


def gd_critical_ideal(model: ModelSpec, data: DataPoint, field: FieldTag = QQ) -> CriticalSystem:
    if data.kind != "grassmann":
        raise ValueError("GD critical ideal needs Grassmann data (Q = Y^2)")
    return cut_critical_ideal(model, data, field)


# parametric ------------------------------------------------------------------------


def param_traces(par: Parametrization, data: DataPoint, field: FieldTag, ring: Ring | None = None):
    ring = ring or par.ring
    X = [[_to_field(f, field).to_ring(ring) for f in row] for row in par.skew()]
    num, den = objective_traces(X, data.matrix(ring, field))
    return X, num, den


def _to_field(f: MultiPoly, field: FieldTag) -> MultiPoly:
    if field.kind == "GF" and f.field.kind == "QQ":
        return f.reduce_mod(field.p)
    return f


NU = "_nu"


def parametric_critical_ideal(par: Parametrization, data: DataPoint, field: FieldTag = QQ,
                              formulation: str = "multiplier", model: ModelSpec | None = None,
                              equations: Sequence[MultiPoly] = ()) -> CriticalSystem:
    """Critical points of num/den over the parameter space (saturated by den).

    ``equations`` are extra Pluecker equations restricting the parametrized
    variety; they are pulled back and enforced with multipliers.
    """
    params = par.params
    if equations and formulation != "multiplier":
        raise ValueError("extra equations need the multiplier formulation")
    mus = [f"_mu{k}" for k in range(len(equations))]
    if formulation == "minors":
        ring = par.ring
    elif formulation == "multiplier":
        ring = par.ring.extend([NU] + mus)
    else:
        raise ValueError(f"unknown formulation {formulation!r}")
    X, num, den = param_traces(par, data, field, ring)
    if formulation == "minors":
        M = PolyMatrix([[num] + [num.diff(t) for t in params], [den] + [den.diff(t) for t in params]])
        gens = [m for m in minors(M, 2) if not m.is_zero()]
    else:
        nu = MultiPoly.var(NU, ring, field)
        pulled = [_pullback(g, par, X, ring, field) for g in equations]
        gens = [num - nu * den]
        for t in params:
            e = num.diff(t) - nu * den.diff(t)
            for mu, g in zip(mus, pulled):
                e = e - MultiPoly.var(mu, ring, field) * g.diff(t)
            gens.append(e)
        gens += pulled
    I = IdealHandle(gens, ring, field)
    sys = CriticalSystem(model, data, "parametric", I, [("den", [den])], projective=False,
                         fiber_size=par.fiber_size)
    drop = rank_drop_generators(par, field, ring)
    if drop:
        sys = sys.with_saturation("parametrization rank drop", drop)
    if data.Y is not None:
        txy = trace(matmul(X, data.y_matrix(ring, field)))
        sys = sys.with_saturation("trace(XY)", [txy])
    return sys


def rank_drop_generators(par: Parametrization, field: FieldTag, ring: Ring | None = None) -> list[MultiPoly]:
    """(s+1)-minors of [x(t); dx/dt_1; ...]: where the projective parametrization is not
    an immersion. Every such point solves the rank-one condition for all data. Empty
    for charts known to be immersive or when some minor is a nonzero constant."""
    if par.immersive:
        return []
    ring = ring or par.ring
    x = [_to_field(f, field).to_ring(ring) for f in par.plucker()]
    rows = [x] + [[f.diff(t) for f in x] for t in par.params]
    out = []
    for m in minors(PolyMatrix(rows), len(rows)):
        if m.is_zero():
            continue
        if m.is_constant():
            return []
        out.append(m)
    return out


def _pullback(g: MultiPoly, par: Parametrization, X, ring: Ring, field: FieldTag) -> MultiPoly:
    n = par.n
    names = plucker_names(n)
    vals = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            vals[names[k]] = X[i][j]
            k += 1
    return _to_field(g, field).substitute(vals, ring)


def grassmannian_chart(n: int) -> Parametrization:
    return schubert_chart(SchubertIndex(1, 2, n))


# ---------------------------------------------------------------------------
# counting


def _dehomogenize(polys: Sequence[MultiPoly], ring: Ring, field: FieldTag, rng: random.Random):
    """Restrict to a random affine chart l(x) = 1 by solving for the last variable."""
    top = field.p if field.kind == "GF" else 100
    coeffs = [rng.randrange(1, top) for _ in ring.names]
    last = ring.names[-1]
    sub_ring = Ring(ring.names[:-1])
    inv = pow(coeffs[-1], -1, field.p) if field.kind == "GF" else Fraction(1, coeffs[-1])
    expr = MultiPoly.constant(1, sub_ring, field)
    for c, v in zip(coeffs[:-1], ring.names[:-1]):
        expr = expr - MultiPoly.var(v, sub_ring, field).scale(c)
    expr = expr.scale(inv)
    return [p.substitute({last: expr}, sub_ring) for p in polys], sub_ring


def affine_system(sys: CriticalSystem, seed: int = 0) -> IdealHandle:
    """Generators whose affine solutions are exactly the points of the critical ideal:
    random chart for projective systems and one extra variable per saturation."""
    rng = random.Random(f"count:{seed}")
    field = sys.field
    ring = sys.ring
    gens = list(sys.ideal.gens)
    sats = [_combine(polys, rng, ring, field) for _, polys in sys.saturate_by]
    if sys.projective:
        allp, ring = _dehomogenize(gens + sats, ring, field, rng)
        gens, sats = allp[:len(gens)], allp[len(gens):]
    ys = [f"_y{k}" for k in range(len(sats))]
    big = ring.extend(ys)
    out = [g.to_ring(big) for g in gens]
    for y, h in zip(ys, sats):
        out.append(MultiPoly.var(y, big, field) * h.to_ring(big) - 1)
    return IdealHandle(out, big, field)


def count_critical(sys: CriticalSystem, seed: int = 0, budget: Budget | None = None) -> PointCount:
    """Number of points of the critical ideal (divided by the parametrization's fiber size)."""
    pc = count_points(affine_system(sys, seed), budget, seed)
    f = sys.fiber_size
    if f != 1:
        if pc.total % f or pc.distinct % f:
            raise ArithmeticError(f"count {pc} not divisible by fiber size {f}")
        pc = PointCount(pc.total // f, pc.distinct // f)
    return pc


def critical_dimension(sys: CriticalSystem, seed: int = 0, budget: Budget | None = None) -> int:
    """Dimension of the critical variety (projective dimension for projective systems)."""
    return ideal_dimension(affine_system(sys, seed), budget)


# ---------------------------------------------------------------------------
# choosing a route for a model


def build_system(model: ModelSpec, kind: str, seed: int = 0, field: FieldTag = GF(DEFAULT_PRIMES[0]),
                 route: str = "auto", formulation: str = "multiplier",
                 data: DataPoint | None = None) -> CriticalSystem:
    """Critical system for ED ("ed"), GD ("gd") or SD ("sd") counts."""
    if kind not in ("ed", "gd", "sd"):
        raise ValueError(f"unknown degree kind {kind!r}")
    data = data or DataPoint.of_kind(kind, model.n, seed, field)
    if route == "auto":
        if model.parametric is not None and (model.equations is None or model.n > 4):
            route = "parametric"
        elif model.n == 4 and model.equations is not None:
            route = "implicit"
        else:
            route = "chart"
    if route == "implicit":
        if kind in ("gd", "sd"):
            return cut_critical_ideal(model, data, field)
        return ed_critical_ideal(lagrangian_ideal(model, data, field))
    if route == "parametric":
        if model.parametric is None:
            raise ValueError(f"model {model.name} has no parametrization")
        return parametric_critical_ideal(model.parametric, data, field, formulation, model)
    if route == "chart":
        if model.equations is None:
            raise ValueError(f"model {model.name} has no equations for the chart route")
        return parametric_critical_ideal(grassmannian_chart(model.n), data, field, "multiplier",
                                         model, model.equations)
    raise ValueError(f"unknown route {route!r}")


def critical_count(model: ModelSpec, kind: str, seed: int = 0, prime: int = DEFAULT_PRIMES[0],
                   route: str = "auto", formulation: str = "multiplier",
                   budget: Budget | None = None) -> PointCount:
    sys = build_system(model, kind, seed, GF(prime), route, formulation)
    return count_critical(sys, seed, budget)


def sd_degree(model: ModelSpec, seed: int = 0, prime: int = DEFAULT_PRIMES[0], **kw) -> int:
    """Count for data Q = Z^2 with Z a random full-rank skew matrix."""
    return int(critical_count(model, "sd", seed, prime, **kw))


@dataclass
class DegreeReport:
    model: str
    kind: str
    counts: dict            # (seed, prime) -> PointCount | "budget"
    route: str

    @property
    def values(self) -> set[int]:
        return {c.distinct for c in self.counts.values() if isinstance(c, PointCount)}

    @property
    def complete(self) -> bool:
        return all(isinstance(c, PointCount) for c in self.counts.values())

    @property
    def stable(self) -> bool:
        return self.complete and len(self.values) == 1

    @property
    def value(self) -> int | None:
        return next(iter(self.values)) if self.stable else None

    @property
    def radical(self) -> bool:
        return all(c.radical for c in self.counts.values() if isinstance(c, PointCount))


def _count_task(args):
    model, kind, seed, prime, route, formulation, budget = args
    try:
        return critical_count(model, kind, seed, prime, route, formulation, budget)
    except BudgetExceeded as exc:
        return f"budget: {exc}"
    except PositiveDimensionError as exc:
        return f"positive-dimensional: {exc.dim}"


def degree_report(model: ModelSpec, kind: str, seeds: Sequence[int] = DEFAULT_SEEDS,
                  primes: Sequence[int] = DEFAULT_PRIMES, route: str = "auto",
                  formulation: str = "multiplier", budget: Budget | None = None,
                  workers: int = 1) -> DegreeReport:
    """Counts for every (seed, prime) pair; independent cells may run in parallel processes."""
    cells = [(s, p) for s in seeds for p in primes]
    tasks = [(model, kind, s, p, route, formulation, budget) for s, p in cells]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            results = list(pool.map(_count_task, tasks))
    else:
        results = [_count_task(t) for t in tasks]
    return DegreeReport(model.name, kind, dict(zip(cells, results)), route)


# ---------------------------------------------------------------------------
# extraneous locus and ED-generality


def grassmann_chart_point(B) -> dict[str, Fraction]:
    """Chart coordinates a_k, b_k of the row span of B (needs a nonzero first 2x2 minor)."""
    (p, q), (r, s) = (B[0][0], B[0][1]), (B[1][0], B[1][1])
    det = Fraction(p * s - q * r)
    if det == 0:
        raise ValueError("first 2x2 minor vanishes; point outside the standard chart")
    inv = [[s / det, -q / det], [-r / det, p / det]]
    n = len(B[0])
    rows = [[inv[a][0] * B[0][k] + inv[a][1] * B[1][k] for k in range(n)] for a in range(2)]
    out = {}
    for k in range(2, n):
        out[f"a{k + 1}"] = rows[0][k]
        out[f"b{k + 1}"] = rows[1][k]
    return out


def extraneous_system(n: int, seed: int = 0, field: FieldTag = GF(DEFAULT_PRIMES[0])) -> CriticalSystem:
    """Critical points of the Grassmannian for data Q = Y^2, minus trace(X^2) = 0,
    minus the data point Y itself (saturation by a random combination of the
    coordinate differences of Y's chart point)."""
    data = DataPoint.grassmann(n, seed, field)
    rng = random.Random(f"grassmann:{n}:{seed}:{field}")
    B = [[DataPoint._entry(rng, field) for _ in range(n)] for _ in range(2)]
    par = grassmannian_chart(n)
    sys = parametric_critical_ideal(par, data, field, "multiplier")
    # drop the trace(XY) saturation added for Grassmann data: the extraneous locus lives there
    sys.saturate_by = [s for s in sys.saturate_by if s[0] != "trace(XY)"]
    pt = grassmann_chart_point(B)
    if field.kind == "GF":
        pt = {k: v.numerator * pow(v.denominator, -1, field.p) % field.p for k, v in pt.items()}
    ring = sys.ring
    diffs = [MultiPoly.var(v, ring, field) - MultiPoly.constant(pt[v], ring, field) for v in par.params]
    sys = sys.with_saturation("point Y", diffs, "extraneous")
    sys.extra_y = data  # kept for containment checks
    return sys


def extraneous_ideal(n: int, seed: int = 0, field: FieldTag = GF(DEFAULT_PRIMES[0]),
                     budget: Budget | None = None) -> IdealHandle:
    return extraneous_system(n, seed, field).saturated_ideal(budget, seed)


def extraneous_dimension(n: int, seed: int = 0, prime: int = DEFAULT_PRIMES[0],
                         budget: Budget | None = None) -> int:
    """Projective dimension of the extraneous critical locus (the chart is affine)."""
    return critical_dimension(extraneous_system(n, seed, GF(prime)), seed, budget)


@dataclass(frozen=True)
class EDGenerality:
    general: bool
    witness: str


def is_ed_general(model: ModelSpec, prime: int = DEFAULT_PRIMES[0], budget: Budget | None = None) -> EDGenerality:
    """Transversality of M and the isotropic quadric trace(X^2) = 0."""
    field = GF(prime)
    if model.dim >= 3:
        return EDGenerality(False, f"dimension {model.dim} >= 3: M meets the base locus X^2 = 0")
    if model.equations is not None:
        n = model.n
        R = plucker_ring(n)
        X = skew_matrix(R, n, field)
        den = trace(matmul(X, X))
        names = plucker_names(n)
        gens = model_generators(model, field)
        M = PolyMatrix([[den.diff(v) for v in names]] + [list(r) for r in jacobian(gens, names).entries])
        ideal = IdealHandle(gens + [den] + [m for m in minors(M, model.codim + 1) if not m.is_zero()], R, field)
        d = ideal_dimension(ideal, budget)
        if d <= 0:
            return EDGenerality(True, "tangency ideal defines the empty set")
        return EDGenerality(False, f"tangency locus of projective dimension {d - 1}")
    par = model.parametric
    _, _, den = param_traces(par, DataPoint.generic(model.n, 0, field), field)
    ideal = IdealHandle([den] + [den.diff(t) for t in par.params], par.ring, field)
    d = ideal_dimension(ideal, budget)
    if d < 0:
        return EDGenerality(True, "trace(X(t)^2) has no singular zeros")
    return EDGenerality(False, f"trace(X(t)^2) has singular zeros (dimension {d})")


# ---------------------------------------------------------------------------
# critical points of a generic rational function


def rational_function_system(d: int, e: int, s: int, seed: int = 0,
                             field: FieldTag = GF(DEFAULT_PRIMES[0])) -> CriticalSystem:
    """2x2 minors of [[f, df/dt], [g, dg/dt]] for dense random f, g of degrees d, e in s
    variables, saturated by g (points with g = 0 are not critical points of f/g)."""
    from .models import random_dense_poly
    ring = Ring([f"t{k}" for k in range(1, s + 1)])
    rng = random.Random(f"rational:{d}:{e}:{s}:{seed}:{field}")

    def dense(deg):
        out = MultiPoly.zero(ring, field)
        for k in range(deg + 1):
            out = out + _to_field(random_dense_poly(ring, k, rng), field)
        return out

    f, g = dense(d), dense(e)
    M = PolyMatrix([[f] + [f.diff(t) for t in ring.names], [g] + [g.diff(t) for t in ring.names]])
    I = IdealHandle([m for m in minors(M, 2) if not m.is_zero()], ring, field)
    return CriticalSystem(None, DataPoint("generic", ((0,),)), "rational", I, [("g", [g])])


def rational_function_count(d: int, e: int, s: int, seed: int = 0, prime: int = DEFAULT_PRIMES[0],
                            budget: Budget | None = None) -> PointCount:
    return count_critical(rational_function_system(d, e, s, seed, GF(prime)), seed, budget)
