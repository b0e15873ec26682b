"""Floating-point layer: Pluecker matrices, projection matrices, spectral pairs and metrics."""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
SKEW_TOL = 1e-9
GAP_TOL = 1e-8


class DegenerateInput(ValueError):
    """Raised for inputs outside the generic stratum an operation needs."""


@dataclass(frozen=True)
class LineMatrix:
    """Skew-symmetric n x n matrix of Pluecker coordinates."""

    X: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.X, dtype=float)
        if X.ndim != 2 or X.shape[0] != X.shape[1]:
            raise ValueError("line matrix must be square")
        scale = max(1.0, float(np.abs(X).max()))
        if np.abs(X + X.T).max() > SKEW_TOL * scale:
            raise ValueError("matrix is not skew-symmetric")
        object.__setattr__(self, "X", X)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    def plucker(self) -> np.ndarray:
        """Coordinates x_ij, i < j, in lexicographic order."""
        iu = np.triu_indices(self.n, 1)
        return self.X[iu].copy()

    @classmethod
    def from_plucker(cls, vec: Sequence[float], n: int) -> "LineMatrix":
        X = np.zeros((n, n))
        iu = np.triu_indices(n, 1)
        X[iu] = vec
        return cls(X - X.T)

    def rank(self, tol: float = 1e-9) -> int:
        s = np.linalg.svd(self.X, compute_uv=False)
        return int((s > tol * max(s[0], 1e-300)).sum()) if s.size else 0


@dataclass(frozen=True)
class ProjMatrix:
    """Symmetric projection matrix of trace 2."""

    P: np.ndarray

    def __post_init__(self):
        P = np.asarray(self.P, dtype=float)
        if P.ndim != 2 or P.shape[0] != P.shape[1]:
            raise ValueError("projection matrix must be square")
        object.__setattr__(self, "P", P)

    @property
    def n(self) -> int:
        return self.P.shape[0]

    def check(self, tol: float = 1e-9) -> bool:
        P = self.P
        return (np.abs(P - P.T).max() < tol and np.abs(P @ P - P).max() < tol
                and abs(np.trace(P) - 2) < tol)


@dataclass(frozen=True)
class SpectralSample:
    lam: float
    mu: float

    def __iter__(self):
        return iter((self.lam, self.mu))


class MetricId(enum.Enum):
    CHORDAL = "chordal"
    GEODESIC = "geodesic"
    PROCRUSTES = "procrustes"
    BINET_CAUCHY = "binet-cauchy"
    FUBINI_STUDY = "fubini-study"
    MARTIN = "martin"
    ASIMOV = "asimov"
    PROJECTION = "projection"
    SPECTRAL = "spectral"

    @classmethod
    def parse(cls, name: str) -> "MetricId":
        key = name.strip().lower().replace("_", "-")
        for m in cls:
            if m.value == key or m.name.lower() == key.replace("-", "_"):
                return m
        raise ValueError(f"unknown metric {name!r}; known: {', '.join(m.value for m in cls)}")


def _clip01(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def metric_value(metric: MetricId, s: SpectralSample) -> float:
    """Squared distance as a function of the spectral pair."""
    lam, mu = _clip01(s.lam), _clip01(s.mu)
    if metric is MetricId.CHORDAL:
        return 4 - 2 * lam - 2 * mu
    if metric is MetricId.GEODESIC:
        return math.acos(math.sqrt(lam)) ** 2 + math.acos(math.sqrt(mu)) ** 2
    if metric is MetricId.PROCRUSTES:
        return 4 - 2 * math.sqrt(lam) - 2 * math.sqrt(mu)
    if metric is MetricId.BINET_CAUCHY:
        return 1 - lam * mu
    if metric is MetricId.FUBINI_STUDY:
        return math.acos(math.sqrt(lam * mu)) ** 2
    if metric is MetricId.MARTIN:
        if lam * mu <= 0:
            return math.inf
        return -math.log(lam * mu)
    if metric is MetricId.ASIMOV:
        return math.acos(math.sqrt(mu)) ** 2
    if metric is MetricId.PROJECTION:
        return 1 - mu
    if metric is MetricId.SPECTRAL:
        return 2 - 2 * math.sqrt(mu)
    raise ValueError(metric)


def skew_from_rows(B) -> LineMatrix:
    """X = B^T J B, i.e. x_ij is the 2x2 minor of columns i, j of B."""
    B = np.asarray(B, dtype=float)
    if B.ndim != 2 or B.shape[0] != 2:
        raise ValueError("expected a 2 x n matrix")
    if np.linalg.matrix_rank(B) < 2:
        raise DegenerateInput("rows are linearly dependent")
    return LineMatrix(B.T @ J2 @ B)


def square_and_project(X: LineMatrix | np.ndarray) -> ProjMatrix:
    """P~ = 2 X^2 / trace(X^2)."""
    X = X.X if isinstance(X, LineMatrix) else np.asarray(X, dtype=float)
    X2 = X @ X
    tr = np.trace(X2)
    if abs(tr) <= 1e-14 * max(1.0, float(np.abs(X2).max())):
        raise DegenerateInput("trace(X^2) vanishes; point is on the isotropic quadric")
    P = 2.0 * X2 / tr
    return ProjMatrix((P + P.T) / 2)


def projector_onto(vectors) -> ProjMatrix:
    """Orthogonal projector onto the span of two column vectors."""
    V = np.asarray(vectors, dtype=float)
    Qm, _ = np.linalg.qr(V)
    return ProjMatrix(Qm @ Qm.T)


def spectral_pair(P: ProjMatrix, Q: ProjMatrix) -> SpectralSample:
    """The two largest eigenvalues of P~Q~, computed from the symmetric P~Q~P~."""
    Pm = P.P
    w = np.linalg.eigvalsh(Pm @ Q.P @ Pm)
    lam, mu = float(w[-1]), float(w[-2])
    return SpectralSample(lam, mu)


def chordal_distance(P: ProjMatrix, Q: ProjMatrix) -> float:
    D = P.P - Q.P
    return float((D * D).sum())


def eigenvalues_desc(M) -> np.ndarray:
    """Eigenvalues of a matrix with real spectrum, in decreasing order."""
    w = np.linalg.eigvals(np.asarray(M, dtype=float))
    return np.sort(w.real)[::-1]


def fiber_of_square(P, rel_tol: float = 1e-7) -> list[LineMatrix]:
    """All skew X (up to sign) with X^2 = P, for P in the generic stratum.

    -P is diagonalized; its positive eigenvalues must pair up into r distinct
    doubles. Each pair (u, v) contributes +-sigma (u v^T - v u^T); the global
    sign is fixed, leaving 2^(r-1) projective preimages.
    """
    P = np.asarray(P, dtype=float)
    P = (P + P.T) / 2
    w, V = np.linalg.eigh(-P)
    scale = max(float(np.abs(w).max()), 1e-300)
    if np.abs(P).max() == 0:
        raise DegenerateInput("P = 0 has no generic fiber")
    if w.min() < -rel_tol * scale:
        raise DegenerateInput("P must be negative semidefinite")
    order = np.argsort(w)[::-1]
    w, V = w[order], V[:, order]
    pos = int((w > rel_tol * scale).sum())
    if pos % 2:
        raise DegenerateInput("nonzero eigenvalues must have even multiplicity")
    r = pos // 2
    blocks = []
    for k in range(r):
        a, b = w[2 * k], w[2 * k + 1]
        if abs(a - b) > rel_tol * scale:
            raise DegenerateInput("nonzero eigenvalues must have even multiplicity")
        if k + 1 < r and abs(b - w[2 * k + 2]) <= rel_tol * scale:
            raise DegenerateInput("repeated eigenvalue pair: fiber is not finite")
        sigma = math.sqrt((a + b) / 2)
        u, v = V[:, 2 * k], V[:, 2 * k + 1]
        blocks.append(sigma * (np.outer(u, v) - np.outer(v, u)))
    out = []
    for signs in itertools.product((1.0, -1.0), repeat=r - 1):
        X = blocks[0].copy()
        for s, Bk in zip(signs, blocks[1:]):
            X += s * Bk
        out.append(LineMatrix(X))
    return out


def invariant_plane_critical_points(Q) -> list[ProjMatrix]:
    """Projectors onto the C(n,2) planes spanned by eigenvector pairs of Q,
    ordered by decreasing trace(P Q); the first one is the global maximizer."""
    Q = np.asarray(Q.P if isinstance(Q, ProjMatrix) else Q, dtype=float)
    Q = (Q + Q.T) / 2
    w, V = np.linalg.eigh(Q)
    gaps = np.diff(w)
    if gaps.size and gaps.min() < GAP_TOL * max(1.0, float(np.abs(Q).max())):
        raise DegenerateInput("Q has a repeated eigenvalue")
    pairs = sorted(itertools.combinations(range(len(w)), 2), key=lambda ij: -(w[ij[0]] + w[ij[1]]))
    return [ProjMatrix(np.outer(V[:, i], V[:, i]) + np.outer(V[:, j], V[:, j])) for i, j in pairs]


@dataclass(frozen=True)
class ImageDimension:
    rank: int
    stable: bool
    ranks: tuple[int, ...]

    @property
    def projective(self) -> int:
        return self.rank - 1


def numeric_jacobian(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float = 1e-6) -> np.ndarray:
    cols = []
    for k in range(len(x)):
        e = np.zeros_like(x)
        e[k] = h
        cols.append((np.ravel(f(x + e)) - np.ravel(f(x - e))) / (2 * h))
    return np.array(cols).T


def param_image_dimension(param: Callable[[np.ndarray], np.ndarray], nparams: int,
                          seeds: Sequence[int] = (0, 1, 2), rel_tol: float = 1e-7) -> ImageDimension:
    """Numeric rank of the Jacobian of a polynomial map at random points."""
    ranks = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        x = rng.standard_normal(nparams)
        Jm = numeric_jacobian(param, x)
        s = np.linalg.svd(Jm, compute_uv=False)
        ranks.append(int((s > rel_tol * s[0]).sum()))
    return ImageDimension(max(ranks), len(set(ranks)) == 1, tuple(ranks))


def random_rank2_skew(n: int, rng: np.random.Generator) -> LineMatrix:
    return skew_from_rows(rng.standard_normal((2, n)))


def random_skew(n: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    """Random real skew matrix of the given even rank."""
    if rank % 2 or rank > n:
        raise ValueError("rank must be even and at most n")
    B = rng.standard_normal((rank, n))
    Jr = np.kron(np.eye(rank // 2), J2)
    return B.T @ Jr @ B


def random_projection(n: int, rng: np.random.Generator) -> ProjMatrix:
    return square_and_project(random_rank2_skew(n, rng))


def coordinate_projector(n: int, j: int) -> np.ndarray:
    """E_j = diag(0,...,0,1,...,1) with j-1 leading zeros."""
    return np.diag([0.0] * (j - 1) + [1.0] * (n - j + 1))


def parse_exact(v) -> Fraction:
    """Number or string ("3/5", "0.25", "-2") as an exact fraction."""
    if isinstance(v, bool):
        raise ValueError("booleans are not matrix entries")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(str(v))
    if isinstance(v, str):
        return Fraction(v.strip())
    raise ValueError(f"cannot read matrix entry {v!r}")


def load_matrix(path: str) -> list[list[Fraction]]:
    """JSON array of rows; entries may be numbers or exact decimal/fraction strings."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix file must hold a JSON array of rows")
    rows = [[parse_exact(v) for v in r] for r in data]
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def dump_matrix(M, path: str):
    with open(path, "w") as fh:
        json.dump([[str(Fraction(v)) if isinstance(v, Fraction) else float(v) for v in r] for r in M], fh)


def data_projection(M) -> tuple[ProjMatrix, list[list[Fraction]] | None]:
    """Data as a projection matrix: a 2 x n row matrix B (projector onto its row span)
    or an n x n projection matrix. The exact matrix is returned when available."""
    A = np.array([[float(v) for v in r] for r in M])
    if A.shape[0] == 2 and A.shape[1] > 2:
        return projector_onto(A.T), None
    if A.shape[0] != A.shape[1]:
        raise ValueError("data must be 2 x n rows or an n x n projection matrix")
    P = ProjMatrix(A)
    if not P.check(1e-9):
        raise ValueError("data matrix is not a rank-2 projection matrix")
    exact = [list(r) for r in M] if all(isinstance(v, Fraction) for r in M for v in r) else None
    return P, exact


# ---------------------------------------------------------------------------
# interlacing of projected spectra


def subspace_projector(V) -> np.ndarray:
    """Orthogonal projector onto the column span of V (numerical rank)."""
    U, s, _ = np.linalg.svd(np.asarray(V, dtype=float), full_matrices=False)
    r = int((s > 1e-10 * max(s[0], 1e-300)).sum()) if s.size else 0
    U = U[:, :r]
    return U @ U.T


def intersection_projector(P1, P2, tol: float = 1e-9) -> np.ndarray:
    """Projector onto the intersection of the ranges of two orthogonal projectors."""
    P1, P2 = np.asarray(P1, dtype=float), np.asarray(P2, dtype=float)
    n = P1.shape[0]
    A = np.vstack([np.eye(n) - P1, np.eye(n) - P2])
    _, s, Vt = np.linalg.svd(A)
    s = np.concatenate([s, np.zeros(n - len(s))])
    N = Vt[s < tol].T
    return N @ N.T


def projected_spectrum(Q, P) -> np.ndarray:
    """Eigenvalues of QP (real, via the symmetric PQP), decreasing."""
    P = np.asarray(P, dtype=float)
    M = P @ np.asarray(Q, dtype=float) @ P
    return np.sort(np.linalg.eigvalsh((M + M.T) / 2))[::-1]


def interlacing_gaps(Q, P1, P2) -> np.ndarray:
    """Slacks of lambda_i(QP1) >= lambda_i(QS) >= lambda_{i+k2-k}(QP2), S = P1 cap P2,
    for i = 1..n-(k2-k); all entries are >= 0 when the inequalities hold."""
    S = intersection_projector(P1, P2)
    k2 = int(round(np.trace(P2)))
    k = int(round(np.trace(S)))
    a, b, c = projected_spectrum(Q, P1), projected_spectrum(Q, S), projected_spectrum(Q, P2)
    m = len(a) - (k2 - k)
    return np.concatenate([a[:m] - b[:m], b[:m] - c[k2 - k:k2 - k + m]])
