"""Dense linear algebra and univariate polynomials over GF(p) (p > 0) or QQ (p == 0)."""

from __future__ import annotations

import random
from fractions import Fraction


def _inv(a, p):
    return pow(a, -1, p) if p else 1 / Fraction(a)


def _norm(a, p):
    return a % p if p else a


def minimal_polynomial(cols: list[list], p: int, rng: random.Random) -> list:
    """Minimal polynomial (ascending coefficients, monic) of a random Krylov
    vector for the matrix whose j-th column is ``cols[j]``."""
    D = len(cols)
    if D == 0:
        return [1]
    v = [rng.randrange(1, p) if p else Fraction(rng.randint(1, 97)) for _ in range(D)]
    # incremental echelon form of the Krylov vectors, tracking combinations
    pivots: list[tuple[int, list, list]] = []  # (pivot index, reduced vector, combination)
    k = 0
    while True:
        vec = list(v)
        comb = [0] * (k + 1)
        comb[k] = 1
        for piv, row, rc in pivots:
            c = vec[piv]
            if c:
                for i in range(D):
                    if row[i]:
                        vec[i] = _norm(vec[i] - c * row[i], p)
                for i in range(len(rc)):
                    if rc[i]:
                        comb[i] = _norm(comb[i] - c * rc[i], p)
        lead = next((i for i in range(D) if vec[i]), None)
        if lead is None:
            return [_norm(c, p) for c in comb]
        inv = _inv(vec[lead], p)
        vec = [_norm(x * inv, p) for x in vec]
        comb = [_norm(x * inv, p) for x in comb]
        for idx, (piv, row, rc) in enumerate(pivots):
            rc.extend([0] * (len(comb) - len(rc)))
        pivots.append((lead, vec, comb))
        # next Krylov vector
        nv = [0] * D
        for j in range(D):
            if v[j]:
                cj = cols[j]
                vj = v[j]
                for i in range(D):
                    if cj[i]:
                        nv[i] += vj * cj[i]
        v = [_norm(x, p) for x in nv]
        k += 1


def poly_trim(a: list, p: int) -> list:
    a = [_norm(x, p) for x in a]
    while a and not a[-1]:
        a.pop()
    return a


def poly_derivative(a: list, p: int) -> list:
    return poly_trim([i * a[i] for i in range(1, len(a))], p)


def poly_divmod(a: list, b: list, p: int) -> tuple[list, list]:
    a = poly_trim(a, p)
    b = poly_trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = _inv(b[-1], p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = _norm(a[-1] * inv, p)
        s = len(a) - len(b)
        q[s] = c
        for i, bi in enumerate(b):
            a[s + i] = _norm(a[s + i] - c * bi, p)
        a = poly_trim(a, p)
    return poly_trim(q, p), a


def poly_gcd(a: list, b: list, p: int) -> list:
    a, b = poly_trim(a, p), poly_trim(b, p)
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if not a:
        return a
    inv = _inv(a[-1], p)
    return [_norm(x * inv, p) for x in a]


def squarefree_degree(f: list, p: int) -> int:
    """Number of distinct roots of f (p must exceed deg f for the derivative test)."""
    f = poly_trim(f, p)
    if len(f) <= 1:
        return 0
    if p and p <= len(f):
        raise ValueError("characteristic too small for a derivative-based squarefree test")
    g = poly_gcd(f, poly_derivative(f, p), p)
    return (len(f) - 1) - (len(g) - 1)
