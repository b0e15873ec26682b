"""Exact sparse multivariate polynomials over QQ and GF(p).

Monomials are packed into a single Python int, 16 bits per variable with the
first ring variable in the most significant field, so monomial multiplication
is integer addition. Over QQ a polynomial stores integer numerators together
with one shared positive denominator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldTag:
    """Coefficient field: the rationals, or a prime field GF(p) with p > 2^14."""

    kind: str = "QQ"
    p: int = 0

    def __post_init__(self):
        if self.kind == "QQ":
            if self.p:
                raise ValueError("QQ carries no modulus")
        elif self.kind == "GF":
            if not is_prime(self.p) or self.p <= 2**14:
                raise ValueError(f"modulus must be a prime > 2^14, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "GF"

    def coerce(self, c) -> Fraction | int:
        """Map an int/Fraction into the field (Fraction for QQ, residue for GF)."""
        if self.kind == "QQ":
            return Fraction(c)
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise ZeroDivisionError(f"coefficient {c} is not reducible mod {self.p}")
        return c.numerator * pow(c.denominator, -1, self.p) % self.p

    def __str__(self):
        return "QQ" if self.kind == "QQ" else f"GF({self.p})"


QQ = FieldTag("QQ")


def GF(p: int) -> FieldTag:
    return FieldTag("GF", p)


class Ring:
    """An ordered list of variable names."""

    __slots__ = ("names", "index", "nvars", "_hash")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {v: i for i, v in enumerate(self.names)}
        self.nvars = len(self.names)
        self._hash = hash(self.names)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def shift(self, i: int) -> int:
        return FIELD_BITS * (self.nvars - 1 - i)

    def pack(self, exps: Sequence[int]) -> int:
        m = 0
        for e in exps:
            if e < 0 or e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
            m = (m << FIELD_BITS) | e
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        out = [0] * self.nvars
        for i in range(self.nvars - 1, -1, -1):
            out[i] = m & FIELD_MASK
            m >>= FIELD_BITS
        return tuple(out)

    def var_mono(self, name: str, power: int = 1) -> int:
        return power << self.shift(self.index[name])

    def degree_of(self, m: int) -> int:
        d = 0
        while m:
            d += m & FIELD_MASK
            m >>= FIELD_BITS
        return d

    def extend(self, extra: Iterable[str], front: bool = False) -> "Ring":
        extra = tuple(extra)
        return Ring(extra + self.names if front else self.names + extra)

    def __contains__(self, name):
        return name in self.index


def _grevlex_key(ring: Ring):
    def key(m):
        e = ring.unpack(m)
        return (sum(e), tuple(-x for x in reversed(e)))
    return key


class MultiPoly:
    """Immutable sparse polynomial. ``terms`` maps packed monomials to nonzero ints.

    Over QQ the value is ``sum(c * x^m) / den``; over GF(p) ``den`` is 1 and the
    coefficients are residues in [1, p).
    """

    __slots__ = ("ring", "field", "terms", "den", "_hash")

    def __init__(self, ring: Ring, field: FieldTag, terms: Mapping[int, int] | None = None,
                 den: int = 1, *, _normalized: bool = False):
        self.ring = ring
        self.field = field
        self._hash = None
        if _normalized:
            self.terms = terms
            self.den = den
            return
        terms = dict(terms or {})
        if field.kind == "GF":
            p = field.p
            if den != 1:
                inv = pow(den, -1, p)
                terms = {m: c * inv for m, c in terms.items()}
            self.terms = {m: c % p for m, c in terms.items() if c % p}
            self.den = 1
        else:
            terms = {m: c for m, c in terms.items() if c}
            if den < 0:
                den = -den
                terms = {m: -c for m, c in terms.items()}
            if not terms:
                den = 1
            else:
                g = den
                for c in terms.values():
                    g = math.gcd(g, c)
                    if g == 1:
                        break
                if g > 1:
                    terms = {m: c // g for m, c in terms.items()}
                    den //= g
            self.terms = terms
            self.den = den

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring, field: FieldTag = QQ) -> "MultiPoly":
        return cls(ring, field, {}, 1, _normalized=True)

    @classmethod
    def constant(cls, c, ring: Ring, field: FieldTag = QQ) -> "MultiPoly":
        return cls.from_coeffs({0: c}, ring, field)

    @classmethod
    def var(cls, name: str, ring: Ring, field: FieldTag = QQ) -> "MultiPoly":
        return cls(ring, field, {ring.var_mono(name): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, object], ring: Ring, field: FieldTag = QQ) -> "MultiPoly":
        """Build from {packed monomial: int or Fraction}."""
        if field.kind == "GF":
            return cls(ring, field, {m: field.coerce(c) for m, c in coeffs.items()})
        fr = {m: Fraction(c) for m, c in coeffs.items() if c}
        den = 1
        for c in fr.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(ring, field, {m: int(c * den) for m, c in fr.items()}, den)

    @classmethod
    def from_exponents(cls, coeffs: Mapping[tuple, object], ring: Ring, field: FieldTag = QQ) -> "MultiPoly":
        return cls.from_coeffs({ring.pack(e): c for e, c in coeffs.items()}, ring, field)

    # inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, m: int):
        """Coefficient of a packed monomial (Fraction over QQ, residue over GF)."""
        c = self.terms.get(m, 0)
        return Fraction(c, self.den) if self.field.kind == "QQ" else c

    def coeffs(self) -> dict[int, object]:
        if self.field.kind == "QQ":
            return {m: Fraction(c, self.den) for m, c in self.terms.items()}
        return dict(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.degree_of(m) for m in self.terms)

    def degree(self, name: str) -> int:
        sh = self.ring.shift(self.ring.index[name])
        return max(((m >> sh) & FIELD_MASK for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.degree_of(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(m == 0 for m in self.terms)

    def variables(self) -> set[str]:
        used = 0
        for m in self.terms:
            used |= m
        return {v for i, v in enumerate(self.ring.names) if (used >> self.ring.shift(i)) & FIELD_MASK}

    def sorted_terms(self) -> list[tuple[int, object]]:
        """Terms in descending grevlex order."""
        key = _grevlex_key(self.ring)
        return sorted(self.coeffs().items(), key=lambda t: key(t[0]), reverse=True)

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring or self.field != other.field:
            raise ValueError("ring or field mismatch")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.ring, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.field.kind == "GF":
            p = self.field.p
            t = dict(self.terms)
            for m, c in other.terms.items():
                v = (t.get(m, 0) + c) % p
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
            return MultiPoly(self.ring, self.field, t, 1, _normalized=True)
        d1, d2 = self.den, other.den
        g = math.gcd(d1, d2)
        a, b = d2 // g, d1 // g
        t = {m: c * a for m, c in self.terms.items()}
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c * b
        return MultiPoly(self.ring, self.field, t, d1 * a)

    __radd__ = __add__

    def __neg__(self):
        if self.field.kind == "GF":
            p = self.field.p
            return MultiPoly(self.ring, self.field, {m: p - c for m, c in self.terms.items()}, 1,
                             _normalized=True)
        return MultiPoly(self.ring, self.field, {m: -c for m, c in self.terms.items()}, self.den,
                         _normalized=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        a, b = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out: dict[int, int] = {}
        get = out.get
        bt = list(b.terms.items())
        for m1, c1 in a.terms.items():
            for m2, c2 in bt:
                k = m1 + m2
                out[k] = get(k, 0) + c1 * c2
        if self.field.kind == "GF":
            return MultiPoly(self.ring, self.field, out)
        return MultiPoly(self.ring, self.field, out, self.den * other.den)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if self.field.kind == "GF":
            c = self.field.coerce(c)
            return MultiPoly(self.ring, self.field, {m: v * c for m, v in self.terms.items()})
        return MultiPoly(self.ring, self.field, {m: v * c.numerator for m, v in self.terms.items()},
                         self.den * c.denominator)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.ring, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.ring, self.field)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.ring == other.ring and self.field == other.field
                and self.den == other.den and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.field, self.den, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation ---------------------------------------------------
    def diff(self, name: str) -> "MultiPoly":
        sh = self.ring.shift(self.ring.index[name])
        one = 1 << sh
        out = {}
        for m, c in self.terms.items():
            e = (m >> sh) & FIELD_MASK
            if e:
                out[m - one] = c * e
        return MultiPoly(self.ring, self.field, out, self.den)

    def evaluate(self, point: Mapping[str, object] | Sequence):
        """Exact value at a point (Fractions over QQ, residues over GF(p))."""
        vals = self._point_values(point)
        total = 0
        f = self.field
        for m, c in self.terms.items():
            e = self.ring.unpack(m)
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
                    if f.kind == "GF":
                        term %= f.p
            total += term
        if f.kind == "GF":
            return total % f.p
        return Fraction(total) / self.den

    def evaluate_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for m, c in self.terms.items():
            term = float(c)
            for v, k in zip(point, self.ring.unpack(m)):
                if k:
                    term *= v ** k
            total += term
        return total / self.den

    def _point_values(self, point):
        if isinstance(point, Mapping):
            point = [point.get(v, 0) for v in self.ring.names]
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        return [self.field.coerce(v) for v in point]

    def substitute(self, values: Mapping[str, "MultiPoly"], ring: Ring | None = None) -> "MultiPoly":
        """Substitute polynomials (all in ``ring``) for variables; others map by name."""
        ring = ring or self.ring
        images = []
        for i, v in enumerate(self.ring.names):
            if v in values:
                images.append(values[v])
            elif v in ring.index:
                images.append(MultiPoly.var(v, ring, self.field))
            else:
                raise ValueError(f"variable {v} has no image in target ring")
        cache: list[dict[int, MultiPoly]] = [dict() for _ in images]

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = images[i] ** k
            return cache[i][k]

        out = MultiPoly.zero(ring, self.field)
        for m, c in self.terms.items():
            term = MultiPoly.constant(c, ring, self.field)
            for i, k in enumerate(self.ring.unpack(m)):
                if k:
                    term = term * power(i, k)
            out = out + term
        if self.field.kind == "QQ" and self.den != 1:
            out = out.scale(Fraction(1, self.den))
        return out

    def to_ring(self, ring: Ring) -> "MultiPoly":
        """Re-embed into a ring containing all variables that occur."""
        if ring == self.ring:
            return self
        perm = []
        for i, v in enumerate(self.ring.names):
            perm.append(ring.shift(ring.index[v]) if v in ring.index else None)
        out = {}
        for m, c in self.terms.items():
            e = self.ring.unpack(m)
            nm = 0
            for k, sh in zip(e, perm):
                if k:
                    if sh is None:
                        raise ValueError("variable missing from target ring")
                    nm |= k << sh
            out[nm] = c
        return MultiPoly(ring, self.field, out, self.den, _normalized=True)

    def reduce_mod(self, p: int) -> "MultiPoly":
        """Image of a QQ polynomial in GF(p)."""
        f = GF(p)
        if self.field.kind == "GF":
            if self.field.p != p:
                raise ValueError("cannot change characteristic")
            return self
        return MultiPoly(self.ring, f, dict(self.terms), self.den % p if self.den % p else _bad(self.den, p))

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.sorted_terms()[0][1]
        return self.scale(1 / Fraction(lc)) if self.field.kind == "QQ" else self.scale(pow(lc, -1, self.field.p))

    def primitive_integer_terms(self) -> dict[int, int]:
        """Integer coefficients with content removed (QQ only), sign fixed by leading term."""
        if self.field.kind != "QQ":
            raise ValueError("QQ only")
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        t = {m: c // g for m, c in self.terms.items()} if g else {}
        st = self.sorted_terms()
        if st and st[0][1] < 0:
            t = {m: -c for m, c in t.items()}
        return t

    def __str__(self):
        return poly_print(self)

    def __repr__(self):
        return f"MultiPoly({poly_print(self)!r}, {self.field})"


def _bad(den, p):
    raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")


# text grammar ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class PolySyntaxError(ValueError):
    pass


def poly_parse(text: str, ring: Ring, field: FieldTag = QQ) -> MultiPoly:
    """Parse ``2*x12*x34 - x13^2 + 3/2`` style text into a polynomial.

    Coefficients are integers; ``/`` is allowed only with a constant right operand.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise PolySyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = mt.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            if name not in ring.index:
                raise PolySyntaxError(f"unknown variable {name!r}")
            tokens.append(("var", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = mt.end()
    if not tokens:
        raise PolySyntaxError("empty polynomial text")
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        val = term()
        if sign < 0:
            val = -val
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            rhs = factor()
            if op == "*":
                val = val * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolySyntaxError("division only by nonzero constants")
                val = val.scale(1 / Fraction(rhs.coeff(0)))
        return val

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take() if i < len(tokens) else (None, None)
            if kind != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer")
            base = base ** e
        return base

    def atom():
        kind, val = take() if i < len(tokens) else (None, None)
        if kind == "num":
            return MultiPoly.constant(val, ring, field)
        if kind == "var":
            return MultiPoly.var(val, ring, field)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")") if i < len(tokens) else True:
                raise PolySyntaxError("unbalanced parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return -atom()
        raise PolySyntaxError(f"unexpected token {val!r}")

    out = expr()
    if i != len(tokens):
        raise PolySyntaxError(f"trailing input at token {tokens[i][1]!r}")
    return out


def poly_print(f: MultiPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for m, c in f.sorted_terms():
        e = f.ring.unpack(m)
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(f.ring.names, e) if k)
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        parts.append(("-" if neg else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# matrices ----------------------------------------------------------------------

class PolyMatrix:
    """A rectangular grid of polynomials sharing one ring and field."""

    def __init__(self, entries: Sequence[Sequence[MultiPoly]]):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")
        cells = [e for r in self.entries for e in r]
        if cells:
            ring, field = cells[0].ring, cells[0].field
            if any(e.ring != ring or e.field != field for e in cells):
                raise ValueError("entries must share ring and field")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self.entries + other.entries)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(c) for c in zip(*self.entries)])

    def det(self) -> MultiPoly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return minors(self, self.rows)[0]

    def evaluate(self, point):
        return [[e.evaluate(point) for e in r] for r in self.entries]

    def evaluate_float(self, point):
        return [[e.evaluate_float(point) for e in r] for r in self.entries]


def _row_minors(M: PolyMatrix, rows: Sequence[int], k: int) -> dict[tuple, MultiPoly]:
    """All k x k minors on the given rows, keyed by column subset (Laplace DP)."""
    ring, field = M.entries[0][0].ring, M.entries[0][0].field
    level = {(): MultiPoly.constant(1, ring, field)}
    for depth, r in enumerate(rows):
        nxt = {}
        for cols in combinations(range(M.cols), depth + 1):
            acc = MultiPoly.zero(ring, field)
            for pos, c in enumerate(cols):
                a = M.entries[r][c]
                if a.is_zero():
                    continue
                sub = level.get(cols[:pos] + cols[pos + 1:])
                if sub is None or sub.is_zero():
                    continue
                term = a * sub
                # sign from moving column c to the front of the expansion on the last row
                acc = acc - term if (depth - pos) % 2 else acc + term
            nxt[cols] = acc
        level = nxt
    return level


def minors(M: PolyMatrix, k: int) -> list[MultiPoly]:
    """All k x k minors, ordered lexicographically by (row subset, column subset)."""
    if k <= 0:
        raise ValueError("minor size must be positive")
    if k > min(M.rows, M.cols):
        raise ValueError("minor size exceeds matrix dimensions")
    out = []
    for rows in combinations(range(M.rows), k):
        by_cols = _row_minors(M, rows, k)
        out.extend(by_cols[cols] for cols in combinations(range(M.cols), k))
    return out


def jacobian(polys: Sequence[MultiPoly], variables: Sequence[str]) -> PolyMatrix:
    if not polys:
        raise ValueError("empty polynomial list")
    return PolyMatrix([[f.diff(v) for v in variables] for f in polys])


# Pluecker coordinates ---------------------------------------------------------

def plucker_name(i: int, j: int, n: int) -> str:
    """Variable name for the Pluecker coordinate x_ij (1-based, i < j)."""
    if i > j:
        i, j = j, i
    return f"x{i}{j}" if n < 10 else f"x{i}_{j}"


def plucker_names(n: int) -> list[str]:
    return [plucker_name(i, j, n) for i, j in combinations(range(1, n + 1), 2)]


def plucker_ring(n: int, extra: Iterable[str] = ()) -> Ring:
    return Ring(plucker_names(n) + list(extra))


def skew_matrix(ring: Ring, n: int, field: FieldTag = QQ) -> list[list[MultiPoly]]:
    """The generic skew-symmetric n x n matrix X = [x_ij] over ``ring``."""
    zero = MultiPoly.zero(ring, field)
    X = [[zero] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        v = MultiPoly.var(plucker_name(i + 1, j + 1, n), ring, field)
        X[i][j] = v
        X[j][i] = -v
    return X


def pfaffian4(i: int, j: int, k: int, l: int, n: int | None = None,
              ring: Ring | None = None, field: FieldTag = QQ) -> MultiPoly:
    """The Pluecker quadric x_ij x_kl - x_ik x_jl + x_il x_jk."""
    if not (1 <= i < j < k < l):
        raise ValueError("indices must satisfy 1 <= i < j < k < l")
    n = n if n is not None else max(l, 4)
    if l > n:
        raise ValueError("index exceeds n")
    ring = ring or plucker_ring(n)

    def x(a, b):
        return MultiPoly.var(plucker_name(a, b, n), ring, field)
    return x(i, j) * x(k, l) - x(i, k) * x(j, l) + x(i, l) * x(j, k)


def matmul(A, B):
    """Product of two matrices given as nested lists of MultiPoly."""
    n, m, q = len(A), len(B), len(B[0])
    ring, field = A[0][0].ring, A[0][0].field
    out = []
    for i in range(n):
        row = []
        for j in range(q):
            acc = MultiPoly.zero(ring, field)
            for k in range(m):
                if A[i][k] and B[k][j]:
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def trace(A) -> MultiPoly:
    acc = A[0][0]
    for i in range(1, len(A)):
        acc = acc + A[i][i]
    return acc
