"""Buchberger's algorithm with Gebauer-Moeller pair elimination.

Over prime fields the pairs of lowest sugar degree are reduced together as a
sparse-to-dense matrix (F4 style, numpy arithmetic mod p); over the rationals
each S-polynomial is reduced on its own.

Internally every monomial is one Python int: the high bits hold the monomial
order's weight rows (so ``<`` on ints is the monomial order and products are
sums) and the low bits hold the raw exponents with a guard bit per field, used
for divisibility tests.
"""

from __future__ import annotations

import heapq
import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exactalg import FIELD_BITS, FIELD_MASK, FieldTag, MultiPoly, Ring

GUARD_BIT = 1 << (FIELD_BITS - 1)


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its configured pair, term or time limit."""


class PositiveDimensionError(ValueError):
    def __init__(self, dim: int, msg: str = ""):
        super().__init__(msg or f"ideal is not zero-dimensional (affine dimension {dim})")
        self.dim = dim


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or an elimination order (grevlex blocks) eliminating the
    first ``block`` ring variables."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a positive block size")

    def weight_rows(self, nvars: int) -> list[list[int]]:
        if self.kind == "lex":
            return [[int(i == r) for i in range(nvars)] for r in range(nvars)]
        blocks = [(0, nvars)] if self.kind == "grevlex" else [(0, self.block), (self.block, nvars)]
        rows = []
        for lo, hi in blocks:
            for top in range(hi, lo, -1):
                rows.append([int(lo <= i < top) for i in range(nvars)])
        return rows


GREVLEX = MonomialOrder()
LEX = MonomialOrder("lex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


@dataclass
class Budget:
    max_pairs: int = 2_000_000
    max_terms: int = 2_000_000
    seconds: float | None = None


DEFAULT_BUDGET = Budget()


class IdealHandle:
    """Generators in one ring over one field; ``order`` is set when the
    generators form a reduced Groebner basis for that order."""

    def __init__(self, gens: Iterable[MultiPoly], ring: Ring | None = None,
                 field: FieldTag | None = None, order: MonomialOrder | None = None):
        gens = [g for g in gens]
        if ring is None or field is None:
            if not gens:
                raise ValueError("empty ideal needs an explicit ring and field")
            ring = ring or gens[0].ring
            field = field or gens[0].field
        for g in gens:
            if g.ring != ring or g.field != field:
                raise ValueError("generators must share ring and field")
        self.gens = tuple(g for g in gens if not g.is_zero())
        self.ring = ring
        self.field = field
        self.order = order
        self.homogeneous = all(g.is_homogeneous() for g in self.gens)
        self._gb: dict[MonomialOrder, "IdealHandle"] = {}

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        tag = f", GB[{self.order.kind}]" if self.order else ""
        return f"IdealHandle({len(self.gens)} gens in {self.ring.nvars} vars over {self.field}{tag})"

    def __add__(self, other: "IdealHandle | Iterable[MultiPoly]") -> "IdealHandle":
        extra = other.gens if isinstance(other, IdealHandle) else tuple(other)
        return IdealHandle(self.gens + tuple(extra), self.ring, self.field)

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.gens)

    def reduce_mod(self, p: int) -> "IdealHandle":
        from .exactalg import GF
        return IdealHandle([g.reduce_mod(p) for g in self.gens], self.ring, GF(p))


# ---------------------------------------------------------------------------
# engine


class _Engine:
    """Encodes polynomials of one ring for one order/field and runs Buchberger."""

    def __init__(self, ring: Ring, field: FieldTag, order: MonomialOrder, budget: Budget | None):
        self.ring = ring
        self.field = field
        self.order = order
        self.budget = budget or DEFAULT_BUDGET
        self.p = field.p if field.kind == "GF" else 0
        n = ring.nvars
        self.n = n
        self.rows = order.weight_rows(n)
        self.rawbits = FIELD_BITS * n
        self.rawmask = (1 << self.rawbits) - 1
        self.guard = sum(GUARD_BIT << (FIELD_BITS * k) for k in range(n))
        self.deg_row = 0  # first weight row is a degree only for grevlex
        self.polys: list[list[tuple[int, object]]] = []   # descending terms, monic
        self.tails: list[list[tuple[int, object]]] = []
        self.leads: list[int] = []
        self.lead_raw: list[int] = []
        self.sugar: list[int] = []
        self.memo: dict[int, int] = {}
        self.miss: set[int] = set()
        self.start = time.monotonic()
        self.pairs_done = 0

    # encoding ------------------------------------------------------------------
    def key_of_exps(self, e) -> int:
        k = 0
        for row in self.rows:
            k = (k << FIELD_BITS) | sum(e[i] for i in range(self.n) if row[i])
        return k

    def encode_raw(self, raw: int) -> int:
        return (self.key_of_exps(self.ring.unpack(raw)) << self.rawbits) | raw

    def encode(self, f: MultiPoly) -> list[tuple[int, object]]:
        if f.field.kind == "GF":
            items = [(self.encode_raw(m), c) for m, c in f.terms.items()]
        else:
            items = [(self.encode_raw(m), Fraction(c, f.den)) for m, c in f.terms.items()]
        items.sort(reverse=True)
        return items

    def decode(self, terms: Sequence[tuple[int, object]]) -> MultiPoly:
        rm = self.rawmask
        return MultiPoly.from_coeffs({m & rm: c for m, c in terms}, self.ring, self.field)

    def degree(self, m: int) -> int:
        return self.ring.degree_of(m & self.rawmask)

    def lcm(self, a: int, b: int) -> int:
        ea = self.ring.unpack(a & self.rawmask)
        eb = self.ring.unpack(b & self.rawmask)
        e = tuple(x if x > y else y for x, y in zip(ea, eb))
        return (self.key_of_exps(e) << self.rawbits) | self.ring.pack(e)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b & self.rawmask | g) - (a & self.rawmask)) & g == g

    def coprime(self, a: int, b: int) -> bool:
        # no shared variable: fieldwise min is zero
        ea = a & self.rawmask
        eb = b & self.rawmask
        for _ in range(self.n):
            if ea & FIELD_MASK and eb & FIELD_MASK:
                return False
            ea >>= FIELD_BITS
            eb >>= FIELD_BITS
        return True

    # budget ----------------------------------------------------------------------
    def check_budget(self):
        b = self.budget
        if self.pairs_done > b.max_pairs:
            raise BudgetExceeded(f"more than {b.max_pairs} S-pairs")
        if b.seconds is not None and time.monotonic() - self.start > b.seconds:
            raise BudgetExceeded(f"wall clock above {b.seconds}s")

    # reduction ---------------------------------------------------------------------
    def find_reducer(self, m: int):
        raw = m & self.rawmask
        hit = self.memo.get(raw)
        if hit is not None:
            return hit
        if raw in self.miss:
            return None
        g = self.guard
        rg = raw | g
        best = None
        best_len = 0
        for i, lr in enumerate(self.lead_raw):
            if (rg - lr) & g == g:
                ln = len(self.polys[i])
                if best is None or ln < best_len:
                    best, best_len = i, ln
        if best is None:
            self.miss.add(raw)
        else:
            self.memo[raw] = best
        return best

    def add_reducer(self, terms, sugar: int) -> int:
        self.polys.append(terms)
        self.tails.append(terms[1:])
        self.leads.append(terms[0][0])
        self.lead_raw.append(terms[0][0] & self.rawmask)
        self.sugar.append(sugar)
        self.miss.clear()
        return len(self.polys) - 1

    def reduce(self, d: dict, full: bool = True) -> list[tuple[int, object]]:
        """Normal form of the polynomial held in dict ``d`` (consumed), descending terms."""
        heap = [-m for m in d]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        out = []
        polys = self.polys
        tails = self.tails
        max_terms = self.budget.max_terms
        p = self.p
        while heap:
            m = -pop(heap)
            c = d.pop(m, 0)
            if p:
                c %= p
            if not c:
                continue
            gi = self.find_reducer(m)
            if gi is None:
                out.append((m, c))
                if not full:
                    # keep the rest unreduced
                    rest = sorted(((k, v % p if p else v) for k, v in d.items()), reverse=True)
                    rest = [(k, v) for k, v in rest if v]
                    out.extend(rest)
                    return out
                continue
            g = polys[gi]
            shift = m - g[0][0]
            if p:
                # lazy arithmetic: residues are normalized when popped
                c = p - c % p
            else:
                c = -c
            for m2, c2 in tails[gi]:
                key = m2 + shift
                if key in d:
                    d[key] += c * c2
                else:
                    d[key] = c * c2
                    push(heap, -key)
            if len(d) > max_terms:
                raise BudgetExceeded(f"intermediate polynomial above {max_terms} terms")
        return out

    def make_monic(self, terms):
        c0 = terms[0][1]
        if self.p:
            p = self.p
            inv = pow(c0, -1, p)
            if inv == 1:
                return terms
            return [(m, c * inv % p) for m, c in terms]
        if c0 == 1:
            return terms
        return [(m, c / c0) for m, c in terms]

    def spoly(self, i: int, j: int, lcm: int) -> dict:
        f, g = self.polys[i], self.polys[j]
        sf = lcm - f[0][0]
        sg = lcm - g[0][0]
        d = {}
        for k in range(1, len(f)):
            m, c = f[k]
            d[m + sf] = c
        p = self.p
        for k in range(1, len(g)):
            m, c = g[k]
            key = m + sg
            v = d.get(key, 0) - c
            if p:
                v %= p
            if v:
                d[key] = v
            else:
                d.pop(key, None)
        return d

    # Buchberger ----------------------------------------------------------------------
    def run(self, gens: Sequence[MultiPoly]) -> list[list[tuple[int, object]]]:
        todo = []
        for f in gens:
            if f.is_zero():
                continue
            t = self.encode(f)
            todo.append((self.degree_max(t), t))
        todo.sort(key=lambda x: (x[0], x[1][0][0]))
        active: list[int] = []
        pairs: list = []        # heap of (sugar, lcm, i, j)
        for sug, t in todo:
            self.check_budget()
            red = self.reduce(dict(t))
            if not red:
                continue
            red = self.make_monic(red)
            h = self.add_reducer(red, sug)
            if red[0][0] & self.rawmask == 0:
                return [[(red[0][0], red[0][1])]]
            active, pairs = self.update(active, pairs, h)
        while pairs:
            sug, lcm, i, j = heapq.heappop(pairs)
            self.pairs_done += 1
            if self.pairs_done % 64 == 0:
                self.check_budget()
            d = self.spoly(i, j, lcm)
            if not d:
                continue
            red = self.reduce(d)
            if not red:
                continue
            red = self.make_monic(red)
            h = self.add_reducer(red, sug)
            if red[0][0] & self.rawmask == 0:
                return [[(red[0][0], red[0][1])]]
            active, pairs = self.update(active, pairs, h)
        return self.interreduce(active)

    def run_f4(self, gens: Sequence[MultiPoly]) -> list[list[tuple[int, object]]]:
        """Same basis as ``run``, but all pairs of the lowest sugar are reduced together
        as one matrix (prime fields only)."""
        todo = sorted(((self.degree_max(t), t) for t in (self.encode(f) for f in gens if not f.is_zero())),
                      key=lambda x: (x[0], x[1][0][0]))
        active: list[int] = []
        pairs: list = []
        for sug, t in todo:
            self.check_budget()
            red = self.reduce(dict(t))
            if not red:
                continue
            h = self.add_reducer(self.make_monic(red), sug)
            if red[0][0] & self.rawmask == 0:
                return [[(red[0][0], 1)]]
            active, pairs = self.update(active, pairs, h)
        while pairs:
            self.check_budget()
            sug = pairs[0][0]
            batch = []
            while pairs and pairs[0][0] == sug:
                batch.append(heapq.heappop(pairs))
            self.pairs_done += len(batch)
            for red in self.f4_step(batch):
                h = self.add_reducer(red, sug)
                if red[0][0] & self.rawmask == 0:
                    return [[(red[0][0], 1)]]
                active, pairs = self.update(active, pairs, h)
        return self.interreduce(active)

    def f4_step(self, batch) -> list[list[tuple[int, int]]]:
        """Reduce the S-polynomials of ``batch`` against the current basis by linear algebra.

        Returns monic polynomials whose leading monomials are new; their tails are
        reduced with respect to the basis.
        """
        p = self.p
        lower = {}
        for _, lcm, i, j in batch:
            for g in (i, j):
                lower[(g, lcm - self.leads[g])] = None
        # symbolic preprocessing: one pivot row for every reducible monomial
        upper = {}
        seen = set()
        stack = []
        for g, s in lower:
            for m, _ in self.polys[g]:
                if m + s not in seen:
                    seen.add(m + s)
                    stack.append(m + s)
        while stack:
            m = stack.pop()
            gi = self.find_reducer(m)
            if gi is None:
                continue
            s = m - self.leads[gi]
            upper[m] = (gi, s)
            for m2, _ in self.tails[gi]:
                if m2 + s not in seen:
                    seen.add(m2 + s)
                    stack.append(m2 + s)
        cols = sorted(seen, reverse=True)
        col = {m: k for k, m in enumerate(cols)}
        lower = [gs for gs in lower if upper.get(self.leads[gs[0]] + gs[1]) != gs]
        if not lower:
            return []
        L = np.zeros((len(lower), len(cols)), dtype=np.int64)
        for r, (g, s) in enumerate(lower):
            for m, c in self.polys[g]:
                L[r, col[m + s]] = c
        # eliminate pivot columns from the top; pivot rows are monic
        for m in sorted(upper, reverse=True):
            c = col[m]
            nz = np.flatnonzero(L[:, c])
            if not len(nz):
                continue
            gi, s = upper[m]
            idx = np.fromiter((col[m2 + s] for m2, _ in self.tails[gi]), dtype=np.int64)
            vals = np.fromiter((c2 for _, c2 in self.tails[gi]), dtype=np.int64)
            f = L[nz, c]
            L[nz, c] = 0
            if len(idx):
                sub = L[np.ix_(nz, idx)]
                L[np.ix_(nz, idx)] = (sub - np.outer(f, vals)) % p
        free = np.array([k for k, m in enumerate(cols) if m not in upper], dtype=np.int64)
        if not len(free):
            return []
        A = L[:, free]
        A = A[np.any(A != 0, axis=1)]
        rows = _rref_mod_p(A, p)
        out = []
        for row in rows:
            nzc = np.flatnonzero(row)
            out.append([(cols[free[k]], int(row[k])) for k in nzc])
        return out

    def degree_max(self, terms) -> int:
        return max(self.degree(m) for m, _ in terms)

    def update(self, active: list[int], pairs: list, h: int):
        """Gebauer-Moeller update of the active basis and the pair queue."""
        lh = self.leads[h]
        sh = self.sugar[h]
        dh = self.degree(lh)
        cand = []
        for g in active:
            lg = self.leads[g]
            L = self.lcm(lg, lh)
            dl = self.degree(L)
            sug = max(sh + dl - dh, self.sugar[g] + dl - self.degree(lg))
            cand.append((L, g, self.coprime(lg, lh), sug))
        # criterion M: drop (g,h) if some other (g2,h) has lcm properly dividing lcm(g,h)
        keep = []
        for idx, (L, g, cop, sug) in enumerate(cand):
            dominated = False
            for jdx, (L2, g2, cop2, _) in enumerate(cand):
                if jdx == idx:
                    continue
                if L2 != L and self.divides(L2, L):
                    dominated = True
                    break
                if L2 == L and jdx < idx:
                    # equal lcms: keep only one representative (prefer a coprime one)
                    if cop2 or not cop:
                        dominated = True
                        break
            if not dominated:
                keep.append((L, g, cop, sug))
        # criterion F/product: coprime leading monomials reduce to zero
        new_pairs = [(sug, L, g, h) for L, g, cop, sug in keep if not cop]
        # criterion B on old pairs
        old = []
        for item in pairs:
            sug, L, i, j = item
            if self.divides(lh, L):
                li = self.lcm(self.leads[i], lh)
                lj = self.lcm(self.leads[j], lh)
                if li != L and lj != L:
                    continue
            old.append(item)
        old.extend(new_pairs)
        heapq.heapify(old)
        active = [g for g in active if not self.divides(lh, self.leads[g])]
        active.append(h)
        return active, old

    def interreduce(self, active: list[int]) -> list[list[tuple[int, object]]]:
        active = sorted(active, key=lambda i: self.leads[i])
        minimal = []
        for i in active:
            if not any(self.divides(self.leads[j], self.leads[i]) for j in minimal):
                minimal.append(i)
        # reduce tails against the minimal basis; a lead never divides its own tail
        base = [self.polys[i] for i in minimal]
        self.polys, self.tails, self.leads, self.lead_raw, self.sugar = [], [], [], [], []
        for t in base:
            self.add_reducer(t, 0)
        self.memo = {}
        out = []
        for t in base:
            d = {m: c for m, c in t[1:]}
            out.append([t[0]] + (self.reduce(d) if d else []))
        return out


def _rref_mod_p(A: np.ndarray, p: int) -> list[np.ndarray]:
    """Nonzero rows of the reduced row echelon form of A over GF(p), in order."""
    A = A % p
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = np.flatnonzero(A[r:, c])
        if not len(piv):
            continue
        k = r + piv[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        r += 1
    return list(A[:r])


# the matrix path keeps products of residues below 2^63
F4_MAX_PRIME = 1 << 31


def _engine_for(I: IdealHandle, order: MonomialOrder, budget: Budget | None) -> _Engine:
    return _Engine(I.ring, I.field, order, budget)


def groebner_basis(I: IdealHandle, order: MonomialOrder = GREVLEX, budget: Budget | None = None) -> IdealHandle:
    """Reduced Groebner basis, sorted by increasing leading monomial."""
    if I.order == order:
        return I
    cached = I._gb.get(order)
    if cached is not None:
        return cached
    eng = _engine_for(I, order, budget)
    use_f4 = I.field.kind == "GF" and I.field.p < F4_MAX_PRIME
    basis = eng.run_f4(I.gens) if use_f4 else eng.run(I.gens)
    polys = [eng.decode(t) for t in basis]
    G = IdealHandle(polys, I.ring, I.field, order=order)
    G._engine_leads = [t[0][0] & eng.rawmask for t in basis]
    G._gb[order] = G
    I._gb[order] = G
    return G


def leading_monomials(G: IdealHandle) -> list[int]:
    """Raw packed leading monomials of a Groebner basis."""
    if G.order is None:
        raise ValueError("not a Groebner basis")
    leads = getattr(G, "_engine_leads", None)
    if leads is None:
        eng = _engine_for(G, G.order, None)
        leads = [eng.encode(g)[0][0] & eng.rawmask for g in G.gens]
        G._engine_leads = leads
    return leads


def normal_form(f: MultiPoly, G: IdealHandle) -> MultiPoly:
    if G.order is None:
        G = groebner_basis(G)
    eng = _engine_for(G, G.order, None)
    for g in G.gens:
        t = eng.encode(g)
        eng.add_reducer(eng.make_monic(t), 0)
    if f.is_zero():
        return f
    return eng.decode(eng.reduce(dict(eng.encode(f))))


def contains(I: IdealHandle, f: MultiPoly) -> bool:
    return normal_form(f, groebner_basis(I)).is_zero()


def ideal_equals(I: IdealHandle, J: IdealHandle, budget: Budget | None = None) -> bool:
    if I.ring != J.ring or I.field != J.field:
        raise ValueError("ideals live in different rings")
    GI = groebner_basis(I, budget=budget)
    GJ = groebner_basis(J, budget=budget)
    return all(normal_form(g, GI).is_zero() for g in J.gens) and \
        all(normal_form(g, GJ).is_zero() for g in I.gens)


def spair_residues(G: IdealHandle) -> list[MultiPoly]:
    """Normal forms of all S-polynomials of a basis (all zero for a Groebner basis)."""
    if G.order is None:
        raise ValueError("not a Groebner basis")
    eng = _engine_for(G, G.order, None)
    idx = []
    for g in G.gens:
        idx.append(eng.add_reducer(eng.make_monic(eng.encode(g)), 0))
    out = []
    for i, j in itertools.combinations(idx, 2):
        L = eng.lcm(eng.leads[i], eng.leads[j])
        d = eng.spoly(i, j, L)
        out.append(eng.decode(eng.reduce(d)) if d else MultiPoly.zero(G.ring, G.field))
    return out


# ---------------------------------------------------------------------------
# elimination and saturation


def _reordered(I: IdealHandle, first: Sequence[str]) -> tuple[IdealHandle, Ring]:
    rest = [v for v in I.ring.names if v not in set(first)]
    ring = Ring(list(first) + rest)
    return IdealHandle([g.to_ring(ring) for g in I.gens], ring, I.field), ring


def eliminate(I: IdealHandle, drop: Sequence[str], budget: Budget | None = None) -> IdealHandle:
    """Generators of I intersected with the subring without the ``drop`` variables."""
    drop = list(drop)
    for v in drop:
        if v not in I.ring.index:
            raise ValueError(f"unknown variable {v}")
    J, ring = _reordered(I, drop)
    G = groebner_basis(J, elimination_order(len(drop)), budget)
    sub = Ring([v for v in I.ring.names if v not in set(drop)])
    dropped = set(drop)
    keep = [g for g in G.gens if not (g.variables() & dropped)]
    return IdealHandle([g.to_ring(sub) for g in keep], sub, I.field)


_SAT_VAR = "_sat"


def saturate(I: IdealHandle, f: MultiPoly, budget: Budget | None = None) -> IdealHandle:
    """I : f^infinity via the extra-variable construction <I, 1 - y f> and elimination of y."""
    if f.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    ring = I.ring.extend([_SAT_VAR], front=True)
    y = MultiPoly.var(_SAT_VAR, ring, I.field)
    gens = [g.to_ring(ring) for g in I.gens] + [1 - y * f.to_ring(ring)]
    J = IdealHandle(gens, ring, I.field)
    G = groebner_basis(J, elimination_order(1), budget)
    keep = [g.to_ring(I.ring) for g in G.gens if _SAT_VAR not in g.variables()]
    return groebner_basis(IdealHandle(keep, I.ring, I.field), budget=budget)


def intersect(I: IdealHandle, J: IdealHandle, budget: Budget | None = None) -> IdealHandle:
    ring = I.ring.extend(["_int"], front=True)
    t = MultiPoly.var("_int", ring, I.field)
    gens = [t * g.to_ring(ring) for g in I.gens] + [(1 - t) * g.to_ring(ring) for g in J.gens]
    G = groebner_basis(IdealHandle(gens, ring, I.field), elimination_order(1), budget)
    keep = [g.to_ring(I.ring) for g in G.gens if "_int" not in g.variables()]
    return IdealHandle(keep, I.ring, I.field)


def quotient(I: IdealHandle, f: MultiPoly, budget: Budget | None = None) -> IdealHandle:
    """The ideal quotient I : f, via (I intersect <f>) / f."""
    K = intersect(I, IdealHandle([f], I.ring, I.field), budget)
    return IdealHandle([_exact_div(g, f) for g in K.gens], I.ring, I.field)


def _exact_div(g: MultiPoly, f: MultiPoly) -> MultiPoly:
    # f divides g exactly; lex-leading division in any order works for exact quotients
    G = IdealHandle([f], f.ring, f.field)
    eng = _engine_for(G, GREVLEX, None)
    ft = eng.make_monic(eng.encode(f))
    scale = eng.encode(f)[0][1]
    q = {}
    d = dict(eng.encode(g))
    while d:
        m = max(d)
        c = d.pop(m)
        if not eng.divides(ft[0][0], m):
            raise ArithmeticError("division is not exact")
        s = m - ft[0][0]
        q[s] = c
        for m2, c2 in ft[1:]:
            k = m2 + s
            v = d.get(k, 0) - c * c2
            if eng.p:
                v %= eng.p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
    inv = pow(scale, -1, eng.p) if eng.p else 1 / scale
    return eng.decode([(m, c * inv % eng.p if eng.p else c * inv) for m, c in q.items()])


def saturate_iterated(I: IdealHandle, f: MultiPoly, budget: Budget | None = None,
                      max_steps: int = 50) -> IdealHandle:
    """I : f^infinity by iterating ideal quotients until they stabilize."""
    cur = groebner_basis(I, budget=budget)
    for _ in range(max_steps):
        nxt = groebner_basis(quotient(cur, f, budget), budget=budget)
        if ideal_equals(nxt, cur, budget):
            return nxt
        cur = nxt
    raise BudgetExceeded("quotient chain did not stabilize")


# ---------------------------------------------------------------------------
# Hilbert series, dimension, degree


def _minimalize(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def hilbert_numerator(gens: Sequence[tuple[int, ...]]) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/I for a monomial ideal."""
    gens = _minimalize(list(gens))
    return _hilbert_rec(gens)


def _hilbert_rec(gens: list[tuple[int, ...]]) -> list[int]:
    if not gens:
        return [1]
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    if all(not (supports[a] & supports[b]) for a in range(len(gens)) for b in range(a)):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot x^e on a variable frequent among generators that are not pure powers,
    # so that x^e strictly divides at least one generator
    n = len(gens[0])
    mixed = [g for g, s in zip(gens, supports) if len(s) > 1]
    counts = [0] * n
    for g in mixed:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    var = max(range(n), key=lambda i: counts[i])
    exps = sorted(g[var] for g in mixed if g[var])
    e = exps[len(exps) // 2]
    piv = tuple(e if i == var else 0 for i in range(n))
    plus = _minimalize(gens + [piv])
    colon = _minimalize([tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens])
    return _poly_add(_hilbert_rec(plus), [0] * e + _hilbert_rec(colon))


def _lead_exponents(G: IdealHandle) -> list[tuple[int, ...]]:
    return [G.ring.unpack(m) for m in leading_monomials(G)]


def monomial_dimension(gens: Sequence[tuple[int, ...]], nvars: int) -> int:
    """Krull dimension of S/I for a monomial ideal: largest variable set avoiding all supports."""
    if any(sum(g) == 0 for g in gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in _minimalize(list(gens))]
    best = 0

    def search(chosen: frozenset, start: int):
        nonlocal best
        if len(chosen) + (nvars - start) <= best:
            return
        best = max(best, len(chosen))
        for v in range(start, nvars):
            cand = chosen | {v}
            if not any(s <= cand for s in supports):
                search(cand, v + 1)

    search(frozenset(), 0)
    return best


def ideal_dimension(I: IdealHandle, budget: Budget | None = None) -> int:
    """Affine Krull dimension (-1 for the unit ideal). Projective dimension of a
    homogeneous ideal is one less."""
    G = groebner_basis(I, budget=budget)
    if G.is_unit():
        return -1
    return monomial_dimension(_lead_exponents(G), I.ring.nvars)


def ideal_degree(I: IdealHandle, budget: Budget | None = None) -> int:
    """Degree from the Hilbert series of the grevlex leading-term ideal."""
    G = groebner_basis(I, budget=budget)
    if G.is_unit():
        return 0
    num = hilbert_numerator(_lead_exponents(G))
    n = I.ring.nvars
    # divide out (1 - t) as often as possible: N(t) = (1-t)^(n-d) * h(t), degree = h(1)
    k = 0
    while num and sum(num) == 0:
        # synthetic division by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        k += 1
    del n
    return sum(num)


# ---------------------------------------------------------------------------
# zero-dimensional point counting


@dataclass(frozen=True)
class PointCount:
    """Solutions of a zero-dimensional ideal: with multiplicity, and distinct."""

    total: int
    distinct: int

    @property
    def radical(self) -> bool:
        return self.total == self.distinct

    def __int__(self):
        return self.distinct


def standard_monomials(G: IdealHandle) -> list[int]:
    """Raw packed monomials outside the leading-term ideal of a zero-dimensional GB."""
    n = G.ring.nvars
    leads = _lead_exponents(G)
    if any(sum(e) == 0 for e in leads):
        return []
    for i in range(n):
        if not any(e[i] > 0 and sum(e) == e[i] for e in leads):
            raise PositiveDimensionError(monomial_dimension(leads, n))
    out = []
    stack = [tuple([0] * n)]
    seen = {stack[0]}
    while stack:
        e = stack.pop()
        if any(all(a <= b for a, b in zip(l, e)) for l in leads):
            continue
        out.append(G.ring.pack(e))
        for i in range(n):
            f = e[:i] + (e[i] + 1,) + e[i + 1:]
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return out


def count_points(I: IdealHandle, budget: Budget | None = None, seed: int = 0) -> PointCount:
    """Number of affine solutions over the algebraic closure of a zero-dimensional ideal."""
    G = groebner_basis(I, budget=budget)
    if G.is_unit():
        return PointCount(0, 0)
    dim = monomial_dimension(_lead_exponents(G), I.ring.nvars)
    if dim > 0:
        raise PositiveDimensionError(dim)
    basis = standard_monomials(G)
    D = len(basis)
    distinct = _distinct_count(G, basis, seed)
    return PointCount(D, distinct)


def _distinct_count(G: IdealHandle, basis: list[int], seed: int) -> int:
    """Degree of the squarefree part of the minimal polynomial of a random linear form."""
    ring, field = G.ring, G.field
    rng = random.Random(seed)
    eng = _engine_for(G, G.order, None)
    for g in G.gens:
        eng.add_reducer(eng.make_monic(eng.encode(g)), 0)
    pos = {m: i for i, m in enumerate(basis)}
    D = len(basis)
    p = field.p if field.kind == "GF" else 0
    if p:
        lin = [rng.randrange(1, p) for _ in range(ring.nvars)]
    else:
        lin = [Fraction(rng.randint(1, 97)) for _ in range(ring.nvars)]
    cols = []
    for b in basis:
        d = {}
        for i in range(ring.nvars):
            raw = b + (1 << ring.shift(i))
            d[eng.encode_raw(raw)] = lin[i]
        vec = [0] * D
        for m, c in eng.reduce(d):
            vec[pos[m & eng.rawmask]] = c
        cols.append(vec)
    # multiplication matrix M with M[:, j] = cols[j]; Krylov sequence of a random vector
    from .linalg_modp import minimal_polynomial, squarefree_degree
    mp = minimal_polynomial(cols, p, rng)
    return squarefree_degree(mp, p)
