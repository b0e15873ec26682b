"""Closed-form degree formulas (integers only), each tagged with its epistemic status."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import Sequence

from .models import SchubertIndex


class Status(enum.Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    BOUND = "bound"
    DATA = "data"       # tabulated value without a formula


@dataclass(frozen=True)
class FormulaResult:
    value: int
    status: Status
    source: str

    def __int__(self):
        return self.value

    def label(self) -> str:
        return f"{self.value} ({self.status.value})"


def rational_critical_count(d: int, e: int, s: int) -> FormulaResult:
    """Critical points of f/g for generic f, g of degrees d, e in s variables."""
    if d < 0 or e < 0 or s < 1:
        raise ValueError("need d, e >= 0 and s >= 1")
    if d == e:
        value = (s + 1) * (d - 1) ** s
    else:
        num = d * (d - 1) ** s - e * (e - 1) ** s
        value, rem = divmod(num, d - e)
        assert rem == 0
    return FormulaResult(value, Status.THEOREM, "rational function critical count")


def param_ed_bound(d: int, s: int) -> FormulaResult:
    """Upper bound (s+1)(2d-1)^s for an s-dimensional parametrization with minors of degree <= d."""
    if d < 1 or s < 1:
        raise ValueError("need d, s >= 1")
    return FormulaResult((s + 1) * (2 * d - 1) ** s, Status.BOUND, "parametric ED bound")


def gtp_critical_degree(degrees: Sequence[int]) -> FormulaResult:
    """(2 d_1...d_r) * sum_{i_0+...+i_r = 4-r} C(i_0+2, 2) prod (d_k - 1)^{i_k}, for r in {2, 3}."""
    ds = [int(d) for d in degrees]
    r = len(ds)
    if r not in (2, 3):
        raise ValueError("only surfaces (r=2) and curves (r=3) in Gr(2,4) are ED-general")
    total = 0
    for exps in itertools.product(range(4 - r + 1), repeat=r + 1):
        if sum(exps) != 4 - r:
            continue
        total += comb(exps[0] + 2, 2) * prod((d - 1) ** k for d, k in zip(ds, exps[1:]))
    return FormulaResult(2 * prod(ds) * total, Status.THEOREM, "Giambelli-Thom-Porteous degree")


@dataclass(frozen=True)
class DegreePair:
    ed: FormulaResult
    gd: FormulaResult


def ci_degrees(degrees: Sequence[int]) -> DegreePair:
    """ED and GD degrees of a generic complete intersection in Gr(2,4):
    one degree (threefold), two (surface) or three (curve)."""
    ds = [int(d) for d in degrees]
    if any(d < 1 for d in ds):
        raise ValueError("degrees must be positive")
    if len(ds) == 1:
        (d,) = ds
        return DegreePair(FormulaResult(2 * d * (d ** 3 + 3 * d + 2), Status.CONJECTURE, "threefold ED"),
                          FormulaResult(2 * d * (d ** 3 + 2 * d), Status.CONJECTURE, "threefold GD"))
    if len(ds) == 2:
        a, b = ds
        return DegreePair(FormulaResult(2 * a * b * (a * a + b * b + a * b + 3), Status.THEOREM, "surface ED"),
                          FormulaResult(2 * a * b * (a * a + b * b + a * b + 2), Status.CONJECTURE, "surface GD"))
    if len(ds) == 3:
        v = 2 * prod(ds) * sum(ds)
        return DegreePair(FormulaResult(v, Status.THEOREM, "curve ED"),
                          FormulaResult(v, Status.THEOREM, "curve GD"))
    raise ValueError("expected 1, 2 or 3 degrees")


def tangent_curve_degree(u: Sequence[int]) -> FormulaResult:
    """4u3 + 2u2 - 2u1, minus 2 when u3 = u1 + u2 is even."""
    u1, u2, u3 = (int(x) for x in u)
    if not 0 < u1 < u2 < u3:
        raise ValueError("need 0 < u1 < u2 < u3")
    value = 4 * u3 + 2 * u2 - 2 * u1
    if u3 == u1 + u2 and u3 % 2 == 0:
        value -= 2
    return FormulaResult(value, Status.THEOREM, "tangent curve ED/GD degree")


# ---------------------------------------------------------------------------
# Schubert varieties


def schubert_dim(s: SchubertIndex) -> FormulaResult:
    return FormulaResult(s.dim, Status.THEOREM, "Schubert dimension 2n-i-j-1")


def sq_degree_closed(i: int, j: int, n: int) -> int:
    """Degree of the squared Schubert variety S_ij^2."""
    if j == n:
        return 2 ** (n - i - 1)
    return (sum(comb(2 * n - i - j, k) for k in range(n - j + 1, n - i))
            + 2 * comb(2 * n - i - j - 1, n - j))


@lru_cache(maxsize=None)
def sq_degree_recursive(i: int, j: int, n: int) -> int:
    """deg(S_ij^2) = deg(S_{i+1,j}^2) + deg(S_{i,j+1}^2) for j < n-1, deg(S_jj^2) = 0,
    with the rows j = n (Veronese squares) and j = n-1 given directly."""
    if i == j:
        return 0
    if j == n:
        return 2 ** (n - i - 1)
    if j == n - 1:
        return 4 * (2 ** (n - i - 1) - 1)
    return sq_degree_recursive(i + 1, j, n) + sq_degree_recursive(i, j + 1, n)


# rows n-j = 0..7, columns n-i = 1..9
SQ_DEGREE_TABLE = {
    0: [1, 2, 4, 8, 16, 32, 64, 128, 256],
    1: [None, 4, 12, 28, 60, 124, 252, 508, 1020],
    2: [None, None, 12, 40, 100, 224, 476, 984, 2004],
    3: [None, None, None, 40, 140, 364, 840, 1824, 3828],
    4: [None, None, None, None, 140, 504, 1344, 3168, 6996],
    5: [None, None, None, None, None, 504, 1848, 5016, 12012],
    6: [None, None, None, None, None, None, 1848, 6864, 18876],
    7: [None, None, None, None, None, None, None, 6864, 25740],
}


def schubert_sq_degree(s: SchubertIndex) -> FormulaResult:
    if s.j == s.n:
        return FormulaResult(sq_degree_closed(s.i, s.j, s.n), Status.THEOREM, "Veronese square")
    return FormulaResult(sq_degree_closed(s.i, s.j, s.n), Status.CONJECTURE, "squared Schubert degree")


def schubert_ed_degree(s: SchubertIndex) -> FormulaResult:
    i, j, n = s.i, s.j, s.n
    if j == i + 1:
        return FormulaResult(comb(n - i + 1, 2), Status.THEOREM, "ED degree of S_{i,i+1}")
    if j == n:
        return FormulaResult(n - i, Status.THEOREM, "ED degree of S_{i,n}")
    m = n - j + 1
    return FormulaResult(2 * m * m * (j - i) - m * (n - i), Status.CONJECTURE, "Schubert ED degree")


def schubert_gd_degree(s: SchubertIndex) -> FormulaResult:
    i, j, n = s.i, s.j, s.n
    if j - i == 1 or (i, j) == (1, n):
        return FormulaResult(1, Status.THEOREM, "GD degree one")
    return FormulaResult(2, Status.CONJECTURE, "GD degree two")


@dataclass(frozen=True)
class SchubertFormulas:
    dim: FormulaResult
    sq_degree: FormulaResult
    ed_degree: FormulaResult
    gd_degree: FormulaResult


def schubert_formulas(s: SchubertIndex) -> SchubertFormulas:
    return SchubertFormulas(schubert_dim(s), schubert_sq_degree(s), schubert_ed_degree(s), schubert_gd_degree(s))


# ---------------------------------------------------------------------------
# miscellaneous


def base_locus_codim(k: int, r: int) -> FormulaResult:
    """Codimension of the O(n)-orbit with k isotropic 4x4 blocks and r zero blocks."""
    if k < 0 or r < 0:
        raise ValueError("k, r must be nonnegative")
    return FormulaResult(4 * k * k + 2 * k * r + comb(r, 2), Status.THEOREM, "base locus orbit codimension")


def base_locus_degree(n: int) -> FormulaResult:
    if n < 4:
        raise ValueError("n must be at least 4")
    v, rem = divmod(4 * comb(2 * n - 6, n - 3), n - 2)
    assert rem == 0
    return FormulaResult(v, Status.CONJECTURE, "base locus degree (verified n <= 14)")


def pgr_degree(n: int) -> FormulaResult:
    if n < 2:
        raise ValueError("n must be at least 2")
    return FormulaResult(2 * comb(2 * n - 4, n - 2), Status.THEOREM, "projection Grassmannian degree")


VX2_DEGREES = {3: 4, 4: 6, 5: 46, 6: 92, 7: 1072}


def vx2_degree(n: int) -> FormulaResult:
    if n not in VX2_DEGREES:
        raise ValueError(f"no tabulated degree for n={n}")
    return FormulaResult(VX2_DEGREES[n], Status.DATA, "image of the squaring map")


def stenzel_dimension(n: int, rank2: bool = False) -> FormulaResult:
    """Projective dimension of the Stenzel varieties (full pairs, or rank-2 pairs)."""
    v = 4 * n - 8 if rank2 else n * (n - 1) - n // 2 - 1
    return FormulaResult(v, Status.THEOREM, "Stenzel variety dimension")


def extraneous_dimension_formula(n: int, r: int = 0) -> FormulaResult:
    """Dimension of the extraneous critical locus: n-2 for n in {4,5}, 2n-8-r for n >= 6."""
    if n in (4, 5):
        if r:
            raise ValueError("the r-dependence is only stated for n >= 6")
        return FormulaResult(n - 2, Status.THEOREM, "extraneous locus dimension")
    if n >= 6:
        return FormulaResult(2 * n - 8 - r, Status.THEOREM, "extraneous locus dimension")
    raise ValueError("n must be at least 4")


MISC = {
    "base_locus_codim": base_locus_codim,
    "base_locus_degree": base_locus_degree,
    "pgr_degree": pgr_degree,
    "vx2_degree": vx2_degree,
    "stenzel_dimension": stenzel_dimension,
    "extraneous_dimension": extraneous_dimension_formula,
}


def misc_degree_formulas(name: str, *args) -> FormulaResult:
    try:
        fn = MISC[name]
    except KeyError:
        raise ValueError(f"unknown formula {name!r}; known: {', '.join(MISC)}") from None
    return fn(*args)


# (u1, u2, u3) -> {family: (ED, SD, GD)}; tabulated counts for toric curves
TORIC_TABLE = {
    (1, 2, 3): {"chow": (42, 20, 10), "secant": (19, 15, 15), "tangent": (14, 14, 14)},
    (1, 2, 4): {"chow": (55, 26, 13), "secant": (62, 54, 54), "tangent": (18, 18, 18)},
    (1, 2, 5): {"chow": (68, 32, 16), "secant": (111, 98, 98), "tangent": (22, 22, 22)},
    (1, 2, 6): {"chow": (81, 38, 19), "secant": (170, 151, 151), "tangent": (26, 26, 26)},
    (1, 2, 7): {"chow": (94, 44, 22), "secant": (235, 209, 209), "tangent": (30, 30, 30)},
    (1, 3, 4): {"chow": (54, 24, 12), "secant": (59, 50, 50), "tangent": (18, 18, 18)},
    (1, 3, 5): {"chow": (71, 34, 17), "secant": (122, 108, 108), "tangent": (24, 24, 24)},
    (1, 3, 6): {"chow": (84, 40, 20), "secant": (179, 158, 158), "tangent": (28, 28, 28)},
    (1, 3, 7): {"chow": (97, 46, 23), "secant": (262, 234, 234), "tangent": (32, 32, 32)},
    (1, 4, 5): {"chow": (74, 36, 18), "secant": (113, 97, 97), "tangent": (26, 26, 26)},
    (1, 4, 6): {"chow": (87, 42, 21), "secant": (212, 189, 189), "tangent": (30, 30, 30)},
}

KIND_INDEX = {"ed": 0, "sd": 1, "gd": 2}


def toric_degree(family: str, u: Sequence[int], kind: str) -> FormulaResult:
    """Tabulated toric-curve count; tangent curves use the closed form."""
    u = tuple(int(x) for x in u)
    if family == "tangent":
        return tangent_curve_degree(u)
    try:
        value = TORIC_TABLE[u][family][KIND_INDEX[kind]]
    except KeyError:
        raise ValueError(f"no tabulated {kind} count for {family} {u}") from None
    return FormulaResult(value, Status.DATA, f"toric table, {family}")


def formula_for(model_name: str, extra: dict, n: int, kind: str) -> FormulaResult | None:
    """Closed form or tabulated value matching a catalog model, if any."""
    if "schubert" in extra:
        i, j = extra["schubert"]
        f = schubert_formulas(SchubertIndex(i, j, n))
        return {"ed": f.ed_degree, "gd": f.gd_degree}.get(kind)
    if "degrees" in extra and n == 4:
        pair = ci_degrees(extra["degrees"])
        return {"ed": pair.ed, "gd": pair.gd}.get(kind)
    if "u" in extra and "kind" in extra:
        try:
            return toric_degree(extra["kind"], extra["u"], kind)
        except ValueError:
            return None
    return None
