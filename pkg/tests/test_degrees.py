from itertools import combinations
from math import comb

import numpy as np
import pytest
from numpy.polynomial import polynomial as npoly

from linedist.critical import rational_function_count
from linedist.degrees import (SQ_DEGREE_TABLE, TORIC_TABLE, Status, base_locus_codim, base_locus_degree,
                              ci_degrees, formula_for, gtp_critical_degree, misc_degree_formulas, param_ed_bound,
                              pgr_degree, rational_critical_count, schubert_formulas, sq_degree_closed,
                              sq_degree_recursive, tangent_curve_degree, toric_degree, vx2_degree)
from linedist.models import SchubertIndex, generic_ci_model, schubert_model, toric_model


def _univariate_oracle(d, e, seed):
    """Distinct roots of f'g - fg' with g(root) != 0, for random real f, g."""
    rng = np.random.default_rng(seed)
    f, g = rng.standard_normal(d + 1), rng.standard_normal(e + 1)
    w = npoly.polysub(npoly.polymul(npoly.polyder(f), g), npoly.polymul(f, npoly.polyder(g)))
    roots = npoly.polyroots(np.trim_zeros(w, "b"))
    return sum(abs(npoly.polyval(r, g)) > 1e-9 for r in roots)


@pytest.mark.parametrize("d, e", [(3, 2), (2, 1), (4, 1), (5, 3), (1, 0), (2, 0)])
def test_rational_count_univariate_oracle(d, e):
    assert rational_critical_count(d, e, 1).value == _univariate_oracle(d, e, d * 10 + e)


def test_rational_count_examples():
    assert rational_critical_count(2, 0, 3).value == 1
    assert rational_critical_count(3, 3, 2).value == 12
    assert rational_critical_count(3, 2, 1).value == 4
    assert rational_critical_count(3, 3, 2).status is Status.THEOREM


@pytest.mark.parametrize("d, s", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_rational_count_equal_degrees_brute_force(d, s):
    assert rational_function_count(d, d, s).distinct == rational_critical_count(d, d, s).value


@pytest.mark.parametrize("d, e, s", [(2, 1, 2), (3, 1, 2), (1, 2, 2)])
def test_rational_count_unequal_degrees_brute_force(d, e, s):
    assert rational_function_count(d, e, s).distinct == rational_critical_count(d, e, s).value


def test_gtp_examples():
    assert gtp_critical_degree((1, 1)).value == 12
    assert gtp_critical_degree((2, 3)).value == 264
    assert gtp_critical_degree((1, 1, 1)).value == 6
    with pytest.raises(ValueError):
        gtp_critical_degree((1,))


@pytest.mark.parametrize("d1", range(1, 7))
@pytest.mark.parametrize("d2", range(1, 7))
def test_gtp_surface_identity(d1, d2):
    assert gtp_critical_degree((d1, d2)).value == 2 * d1 * d2 * (d1 * d1 + d2 * d2 + d1 * d2 + 3)


@pytest.mark.parametrize("ds", [(1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 2, 2), (3, 1, 4)])
def test_gtp_curve_identity(ds):
    assert gtp_critical_degree(ds).value == ci_degrees(ds).ed.value == 2 * np.prod(ds) * sum(ds)


def test_ci_degrees():
    p = ci_degrees((2, 2))
    assert (p.ed.value, p.gd.value) == (120, 112)
    assert (p.ed.status, p.gd.status) == (Status.THEOREM, Status.CONJECTURE)
    p = ci_degrees((2,))
    assert (p.ed.value, p.gd.value) == (64, 48) and p.ed.status is Status.CONJECTURE
    assert ci_degrees((1,)).ed.value == 12 and ci_degrees((1,)).gd.value == 6
    p = ci_degrees((1, 2, 3))
    assert p.ed.value == p.gd.value == 72
    with pytest.raises(ValueError):
        ci_degrees((1, 1, 1, 1))


def test_param_bound():
    # d is the largest degree of a 2x2 minor: cubic and linear entries give d = 4
    assert [param_ed_bound(4, s).value for s in (1, 2, 3)] == [14, 147, 1372]
    assert param_ed_bound(3, 1).value == 10
    assert param_ed_bound(4, 1).status is Status.BOUND


def test_tangent_curve_degree():
    assert tangent_curve_degree((1, 2, 3)).value == 14
    assert tangent_curve_degree((1, 3, 4)).value == 18
    assert tangent_curve_degree((1, 2, 5)).value == 22
    for u, row in TORIC_TABLE.items():
        assert row["tangent"] == (tangent_curve_degree(u).value,) * 3


def test_toric_table_sandwich():
    for u, row in TORIC_TABLE.items():
        for family, (ed, sd, gd) in row.items():
            assert gd <= sd <= ed, (u, family)


def test_toric_lookup():
    assert toric_degree("chow", (1, 2, 3), "sd").value == 20
    assert toric_degree("secant", (1, 2, 4), "gd").status is Status.DATA
    with pytest.raises(ValueError):
        toric_degree("chow", (2, 3, 9), "ed")


@pytest.mark.parametrize("n", range(2, 11))
def test_squared_degree_recursion_matches_closed_form(n):
    for i, j in combinations(range(1, n + 1), 2):
        assert sq_degree_recursive(i, j, n) == sq_degree_closed(i, j, n)


def test_squared_degree_table():
    for row, values in SQ_DEGREE_TABLE.items():
        for col, value in enumerate(values, start=1):
            if value is None:
                continue
            # the table is indexed by n - j and n - i; n is arbitrary
            n = 12
            i, j = n - col, n - row
            assert sq_degree_closed(i, j, n) == sq_degree_recursive(i, j, n) == value
    assert SQ_DEGREE_TABLE[7][-1] == 25740


def test_veronese_row():
    for n in range(3, 9):
        for i in range(1, n):
            assert sq_degree_closed(i, n, n) == 2 ** (n - i - 1)


def test_schubert_formulas_examples():
    f = schubert_formulas(SchubertIndex(1, 3, 4))
    assert (f.ed_degree.value, f.gd_degree.value, f.sq_degree.value, f.dim.value) == (10, 2, 12, 3)
    assert f.ed_degree.status is Status.CONJECTURE and f.gd_degree.status is Status.CONJECTURE
    assert schubert_formulas(SchubertIndex(1, 4, 5)).ed_degree.value == 16
    for n in range(3, 9):
        for i in range(1, n):
            assert schubert_formulas(SchubertIndex(i, n, n)).ed_degree.value == n - i


@pytest.mark.parametrize("n", range(3, 9))
def test_adjacent_indices_use_theorem_value(n):
    for i in range(1, n):
        s = SchubertIndex(i, i + 1, n)
        f = schubert_formulas(s)
        assert f.ed_degree.value == comb(n - i + 1, 2) and f.ed_degree.status is Status.THEOREM
        assert f.gd_degree.value == 1 and f.gd_degree.status is Status.THEOREM
    for i, j in combinations(range(1, n + 1), 2):
        if j - i >= 2 and j < n:
            m = n - j + 1
            assert schubert_formulas(SchubertIndex(i, j, n)).ed_degree.value == 2 * m * m * (j - i) - m * (n - i)


def test_n4_schubert_table():
    order = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    eds = [schubert_formulas(SchubertIndex(i, j, 4)).ed_degree.value for i, j in order]
    gds = [schubert_formulas(SchubertIndex(i, j, 4)).gd_degree.value for i, j in order]
    assert eds == [6, 10, 3, 3, 2, 1]
    assert gds == [1, 2, 1, 1, 2, 1]


def test_misc_formulas():
    assert [base_locus_degree(n).value for n in range(4, 10)] == [4, 8, 20, 56, 168, 528]
    assert base_locus_codim(1, 1).value == 6
    assert pgr_degree(4).value == 12 and pgr_degree(5).value == 40
    assert vx2_degree(4).value == 6
    assert misc_degree_formulas("pgr_degree", 6).value == 2 * comb(8, 4)
    with pytest.raises(ValueError):
        misc_degree_formulas("hilbert", 3)
    assert misc_degree_formulas("extraneous_dimension", 6).value == 4
    assert misc_degree_formulas("extraneous_dimension", 5).value == 3


def test_formula_for_catalog_models():
    m = schubert_model(SchubertIndex(2, 4, 5))
    assert formula_for(m.name, m.extra, 5, "ed").value == schubert_formulas(SchubertIndex(2, 4, 5)).ed_degree.value
    ci = generic_ci_model(4, [1, 2], 0)
    assert formula_for(ci.name, ci.extra, 4, "gd").value == 36
    t = toric_model("secant", (1, 2, 3))
    assert formula_for(t.name, t.extra, 4, "sd").value == 15
    assert formula_for("mystery", {}, 4, "ed") is None
