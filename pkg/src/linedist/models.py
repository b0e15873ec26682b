"""Catalog of models inside Gr(2,n), implicit and/or parametric."""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .exactalg import (QQ, FieldTag, MultiPoly, PolyMatrix, Ring, matmul, minors,
                       pfaffian4, plucker_name, plucker_ring, poly_parse,
                       skew_matrix, trace)
from .groebner import IdealHandle, saturate


@dataclass(frozen=True)
class SchubertIndex:
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not (1 <= self.i < self.j <= self.n):
            raise ValueError(f"need 1 <= i < j <= n, got ({self.i},{self.j}) with n={self.n}")

    @property
    def dim(self) -> int:
        return 2 * self.n - self.i - self.j - 1

    def vanishing(self) -> list[tuple[int, int]]:
        """Pluecker coordinates x_rs (r < s) forced to vanish: r < i or s < j."""
        return [(r, s) for r, s in itertools.combinations(range(1, self.n + 1), 2)
                if r < self.i or s < self.j]

    def __str__(self):
        return f"S{self.i},{self.j}"


@dataclass
class Parametrization:
    """A 2 x n matrix of polynomials in parameters; the model is its row span."""

    ring: Ring
    rows: list[list[MultiPoly]]
    identifiable: bool = True
    fiber_size: int = 1
    immersive: bool = False          # known to be an immersion (affine charts)

    @property
    def params(self) -> list[str]:
        return list(self.ring.names)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def plucker(self) -> list[MultiPoly]:
        """Minors x_ij(t), i < j, in lexicographic order."""
        a, b = self.rows
        n = self.n
        return [a[i] * b[j] - a[j] * b[i] for i in range(n) for j in range(i + 1, n)]

    def skew(self) -> list[list[MultiPoly]]:
        n = self.n
        xs = iter(self.plucker())
        X = [[MultiPoly.zero(self.ring, QQ)] * n for _ in range(n)]
        X = [list(r) for r in X]
        for i in range(n):
            for j in range(i + 1, n):
                v = next(xs)
                X[i][j] = v
                X[j][i] = -v
        return X

    def max_minor_degree(self) -> int:
        return max(m.total_degree() for m in self.plucker())

    def evaluate_rows(self, values: Sequence) -> list[list]:
        return [[f.evaluate(values) for f in row] for row in self.rows]


@dataclass
class ModelSpec:
    """A model M in Gr(2,n). ``equations`` are the generators beyond the Pfaffians."""

    n: int
    name: str
    equations: list[MultiPoly] | None = None
    parametric: Parametrization | None = None
    codim: int | None = None          # codimension in the Pluecker projective space
    extra: dict = field(default_factory=dict)

    @property
    def ring(self) -> Ring:
        return plucker_ring(self.n)

    @property
    def implicit(self) -> IdealHandle | None:
        if self.equations is None:
            return None
        return IdealHandle(grassmannian_generators(self.n) + list(self.equations), self.ring, QQ)

    @property
    def dim(self) -> int:
        if self.codim is not None:
            return math.comb(self.n, 2) - 1 - self.codim
        if self.parametric is not None:
            return len(self.parametric.params)
        raise ValueError("unknown dimension")

    # JSON model-file format -----------------------------------------------------------
    def to_json(self) -> dict:
        out = {"n": self.n, "name": self.name}
        if self.equations is not None:
            out["implicit"] = [str(f) for f in self.equations]
        if self.parametric is not None:
            out["parametric"] = {"params": self.parametric.params,
                                 "rows": [[str(f) for f in row] for row in self.parametric.rows]}
            out["identifiable"] = self.parametric.identifiable
        if self.codim is not None:
            out["codim"] = self.codim
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ModelSpec":
        n = int(data["n"])
        eqs = None
        if "implicit" in data:
            R = plucker_ring(n)
            eqs = [poly_parse(s, R) for s in data["implicit"]]
        par = None
        if "parametric" in data:
            pr = Ring(data["parametric"]["params"])
            rows = [[poly_parse(s, pr) for s in row] for row in data["parametric"]["rows"]]
            ident = bool(data.get("identifiable", True))
            par = Parametrization(pr, rows, ident, 1 if ident else int(data.get("fiber_size", 2)))
        codim = data.get("codim")
        if codim is None and par is not None:
            codim = math.comb(n, 2) - 1 - len(par.params)
        return cls(n, data.get("name", "custom"), eqs, par, codim)

    @classmethod
    def load(cls, path: str) -> "ModelSpec":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# ---------------------------------------------------------------------------
# Grassmannian, Schubert varieties, projection Grassmannian


def grassmannian_generators(n: int, field: FieldTag = QQ) -> list[MultiPoly]:
    R = plucker_ring(n)
    return [pfaffian4(*q, n=n, ring=R, field=field)
            for q in itertools.combinations(range(1, n + 1), 4)]


def grassmannian_ideal(n: int, field: FieldTag = QQ) -> IdealHandle:
    return IdealHandle(grassmannian_generators(n, field), plucker_ring(n), field)


def grassmannian_model(n: int) -> ModelSpec:
    return schubert_model(SchubertIndex(1, 2, n))


def schubert_ideal(s: SchubertIndex, field: FieldTag = QQ) -> IdealHandle:
    R = plucker_ring(s.n)
    lin = [MultiPoly.var(plucker_name(r, c, s.n), R, field) for r, c in s.vanishing()]
    return IdealHandle(grassmannian_generators(s.n, field) + lin, R, field)


def schubert_chart(s: SchubertIndex) -> Parametrization:
    """Affine chart of S_ij: rows e_i + sum_{k>i, k!=j} a_k e_k and e_j + sum_{k>j} b_k e_k."""
    n = s.n
    names = [f"a{k}" for k in range(s.i + 1, n + 1) if k != s.j] + [f"b{k}" for k in range(s.j + 1, n + 1)]
    R = Ring(names)
    one = MultiPoly.constant(1, R)
    zero = MultiPoly.zero(R)
    row1, row2 = [], []
    for k in range(1, n + 1):
        if k == s.i:
            row1.append(one)
        elif k > s.i and k != s.j:
            row1.append(MultiPoly.var(f"a{k}", R))
        else:
            row1.append(zero)
        if k == s.j:
            row2.append(one)
        elif k > s.j:
            row2.append(MultiPoly.var(f"b{k}", R))
        else:
            row2.append(zero)
    return Parametrization(R, [row1, row2], immersive=True)


def schubert_model(s: SchubertIndex) -> ModelSpec:
    R = plucker_ring(s.n)
    lin = [MultiPoly.var(plucker_name(r, c, s.n), R) for r, c in s.vanishing()]
    codim = math.comb(s.n, 2) - 1 - s.dim
    return ModelSpec(s.n, f"schubert:{s.i},{s.j}", lin, schubert_chart(s), codim,
                     {"schubert": (s.i, s.j)})


def sym_ring(n: int) -> Ring:
    return Ring([f"p{i}_{j}" if n >= 10 else f"p{i}{j}" for i in range(1, n + 1) for j in range(i, n + 1)])


def sym_matrix(n: int, field: FieldTag = QQ) -> list[list[MultiPoly]]:
    R = sym_ring(n)
    names = R.names
    idx = 0
    P = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = MultiPoly.var(names[idx], R, field)
            P[i][j] = P[j][i] = v
            idx += 1
    return P


def _pgr_quadrics(P) -> list[MultiPoly]:
    n = len(P)
    P2 = matmul(P, P)
    tr = trace(P)
    return [2 * P2[a][b] - tr * P[a][b] for a in range(n) for b in range(a, n)]


def pgr_gens(n: int, field: FieldTag = QQ) -> IdealHandle:
    """Entries of 2P^2 - trace(P) P, plus the 3x3 minors of P when n >= 6."""
    if n < 3:
        raise ValueError("n must be at least 3")
    P = sym_matrix(n, field)
    gens = _pgr_quadrics(P)
    if n >= 6:
        gens += minors(PolyMatrix(P), 3)
    return IdealHandle(gens, sym_ring(n), field)


def schubert_squared_gens(s: SchubertIndex, field: FieldTag = QQ) -> IdealHandle:
    """Quadrics 2P^2 - trace(P) P, the 3x3 minors of P, and the 2x2 minors of
    the row pairs (r, s') with r < i or s' < j."""
    P = sym_matrix(s.n, field)
    gens = _pgr_quadrics(P) + minors(PolyMatrix(P), 3)
    for r, c in itertools.combinations(range(s.n), 2):
        if r + 1 < s.i or c + 1 < s.j:
            gens += minors(PolyMatrix([P[r], P[c]]), 2)
    return IdealHandle(gens, sym_ring(s.n), field)


def schubert_squared_ideal(s: SchubertIndex, field: FieldTag = QQ, budget=None) -> IdealHandle:
    """The generator set above saturated by trace(P).

    Without the saturation the generated ideal also contains the isotropic
    rank-one matrices v v^T with v.v = 0 (trace zero), which inflates the degree.
    """
    I = schubert_squared_gens(s, field)
    return saturate(I, trace(sym_matrix(s.n, field)), budget)


def base_locus_ideal(n: int, field: FieldTag = QQ) -> IdealHandle:
    """Pfaffians plus the entries of X^2."""
    if n < 4:
        raise ValueError("n must be at least 4")
    R = plucker_ring(n)
    X = skew_matrix(R, n, field)
    X2 = matmul(X, X)
    gens = grassmannian_generators(n, field) + [X2[a][b] for a in range(n) for b in range(a, n)]
    return IdealHandle(gens, R, field)


def base_matrix(n: int = 4) -> list[list[complex]]:
    """The isotropic rank-2 skew matrix with X^2 = 0, padded with zeros to size n."""
    i = 1j
    B = [[0, 1, i, 0], [-1, 0, 0, i], [-i, 0, 0, -1], [0, -i, 1, 0]]
    return _pad(B, n)


def nilpotent_matrix(n: int = 3) -> list[list[complex]]:
    """Rank-2 skew matrix with trace(X^2) = 0 but X^2 != 0, padded to size n."""
    i = 1j
    B = [[0, 1 + i, 0], [-1 - i, 0, -1 + i], [0, 1 - i, 0]]
    return _pad(B, n)


def _pad(B, n):
    k = len(B)
    if n < k:
        raise ValueError(f"n must be at least {k}")
    out = [[0j] * n for _ in range(n)]
    for a in range(k):
        for b in range(k):
            out[a][b] = complex(B[a][b])
    return out


# ---------------------------------------------------------------------------
# models in Gr(2,4)


def _check_exponents(u: Sequence[int]):
    u = tuple(int(x) for x in u)
    if len(u) != 3 or not (0 < u[0] < u[1] < u[2]) or math.gcd(*u) != 1:
        raise ValueError(f"need 0 < u1 < u2 < u3 with gcd 1, got {u}")
    return u


def toric_model(kind: str, u: Sequence[int]) -> ModelSpec:
    """Chow threefold, secant surface or tangent curve of the curve (1 : t^u1 : t^u2 : t^u3)."""
    u1, u2, u3 = _check_exponents(u)
    kind = kind.lower()
    if kind == "chow":
        R = Ring(["t", "x", "y"])
        t, x, y = (MultiPoly.var(v, R) for v in R.names)
        one, zero = MultiPoly.constant(1, R), MultiPoly.zero(R)
        rows = [[one, t ** u1, t ** u2, t ** u3], [zero, one, x, y]]
        par = Parametrization(R, rows)
        codim = 2
    elif kind == "secant":
        R = Ring(["t", "x"])
        t, x = (MultiPoly.var(v, R) for v in R.names)
        one = MultiPoly.constant(1, R)
        rows = [[one, t ** u1, t ** u2, t ** u3], [one, x ** u1, x ** u2, x ** u3]]
        par = Parametrization(R, rows, identifiable=False, fiber_size=2)
        codim = 3
    elif kind == "tangent":
        R = Ring(["t"])
        t = MultiPoly.var("t", R)
        one, zero = MultiPoly.constant(1, R), MultiPoly.zero(R)
        rows = [[one, t ** u1, t ** u2, t ** u3],
                [zero, u1 * t ** (u1 - 1), u2 * t ** (u2 - 1), u3 * t ** (u3 - 1)]]
        par = Parametrization(R, rows)
        codim = 4
    else:
        raise ValueError(f"unknown toric family {kind!r}; known: chow, secant, tangent")
    return ModelSpec(4, f"{kind}-toric:{u1},{u2},{u3}", None, par, codim, {"u": (u1, u2, u3), "kind": kind})


def chow_cubic(field: FieldTag = QQ) -> MultiPoly:
    R = plucker_ring(4)
    x = lambda s: MultiPoly.var(s, R, field)
    M = PolyMatrix([[x("x12"), x("x13"), x("x23")],
                    [x("x13"), x("x14") + x("x23"), x("x24")],
                    [x("x23"), x("x24"), x("x34")]])
    return M.det()


def chow_twisted_cubic_implicit() -> ModelSpec:
    m = toric_model("chow", (1, 2, 3))
    return ModelSpec(4, "chow:twisted-cubic", [chow_cubic()], m.parametric, 2, {"u": (1, 2, 3), "kind": "chow"})


def monomials_of_degree(nvars: int, d: int):
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        yield tuple(e)


def random_dense_poly(ring: Ring, d: int, rng: random.Random, lo: int = -20, hi: int = 20,
                      field: FieldTag = QQ) -> MultiPoly:
    coeffs = {}
    for e in monomials_of_degree(ring.nvars, d):
        c = rng.randint(lo, hi)
        if c:
            coeffs[e] = c
    return MultiPoly.from_exponents(coeffs, ring, field)


def generic_ci_model(n: int, degrees: Sequence[int], seed: int = 0) -> ModelSpec:
    """Gr(2,n) cut by len(degrees) dense random Pluecker forms with integer coefficients in [-20, 20]."""
    degrees = [int(d) for d in degrees]
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    if len(degrees) > 2 * (n - 2):
        raise ValueError("too many equations for Gr(2,n)")
    rng = random.Random(f"ci:{n}:{degrees}:{seed}")
    R = plucker_ring(n)
    eqs = [random_dense_poly(R, d, rng) for d in degrees]
    codim = math.comb(n, 2) - 1 - (2 * (n - 2) - len(degrees))
    name = "ci:" + ",".join(map(str, degrees))
    return ModelSpec(n, name, eqs, None, codim, {"degrees": tuple(degrees), "seed": seed})


# ---------------------------------------------------------------------------
# catalog references "family:args"

FAMILIES = ("schubert", "grassmannian", "chow-toric", "secant-toric", "tangent-toric", "chow", "ci")


def resolve_model(ref: str, n: int | None = None, seed: int = 0) -> ModelSpec:
    """Resolve ``family:args`` (e.g. ``schubert:1,3``, ``chow-toric:1,2,3``, ``ci:1,1``)."""
    family, _, args = ref.partition(":")
    family = family.strip().lower()
    nums = [int(a) for a in args.split(",") if a.strip()] if args else []
    if family == "schubert":
        if len(nums) != 2:
            raise ValueError("schubert needs i,j")
        return schubert_model(SchubertIndex(nums[0], nums[1], n or 4))
    if family == "grassmannian":
        return grassmannian_model(nums[0] if nums else (n or 4))
    if family in ("chow-toric", "secant-toric", "tangent-toric"):
        return toric_model(family.split("-")[0], nums)
    if family == "chow":
        return chow_twisted_cubic_implicit()
    if family == "ci":
        return generic_ci_model(n or 4, nums, seed)
    raise ValueError(f"unknown model family {family!r}; known: {', '.join(FAMILIES)}")
