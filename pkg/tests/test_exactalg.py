from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linedist.exactalg import (GF, QQ, MultiPoly, PolyMatrix, PolySyntaxError, Ring, jacobian, minors, pfaffian4,
                               plucker_names, plucker_ring, poly_parse, poly_print, skew_matrix)

R3 = Ring(["x", "y", "z"])
P = 32003


def polys(ring=R3, max_terms=5, max_deg=3):
    term = st.tuples(st.tuples(*[st.integers(0, max_deg)] * ring.nvars), st.integers(-9, 9))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: MultiPoly.from_exponents(dict(ts), ring))


def test_parse_pfaffian_text():
    R = plucker_ring(4)
    f = poly_parse("x12*x34 - x13*x24 + x14*x23", R)
    assert len(f.terms) == 3
    assert f.total_degree() == 2
    assert f == pfaffian4(1, 2, 3, 4)


def test_parse_zero_and_monomial():
    assert poly_parse("0", R3).terms == {}
    g = poly_parse("x^2", R3, GF(P))
    assert list(g.coeffs().values()) == [1]


@pytest.mark.parametrize("bad", ["x +", "w*x", "x ** ", "(x"])
def test_parse_errors(bad):
    with pytest.raises((PolySyntaxError, ValueError)):
        poly_parse(bad, R3)


def test_parse_coefficient_not_reducible():
    with pytest.raises((ZeroDivisionError, PolySyntaxError)):
        poly_parse(f"x/{P}", R3, GF(P))


@given(polys())
def test_print_parse_roundtrip(f):
    assert poly_parse(poly_print(f), R3) == f


def test_pfaffian_indices():
    R = plucker_ring(5)
    expected = poly_parse("x12*x35 - x13*x25 + x15*x23", R)
    assert pfaffian4(1, 2, 3, 5, n=5) == expected
    with pytest.raises(ValueError):
        pfaffian4(1, 3, 2, 4)


def test_pfaffian_vanishes_on_coordinate_line():
    point = {v: 0 for v in plucker_names(4)}
    point["x12"] = 1
    assert pfaffian4(1, 2, 3, 4).evaluate(point) == 0


def test_pfaffian_squared_is_determinant():
    R = plucker_ring(4)
    X = PolyMatrix(skew_matrix(R, 4))
    assert X.det() == pfaffian4(1, 2, 3, 4) ** 2


def test_minors_small_cases():
    x, y = MultiPoly.var("x", R3), MultiPoly.var("y", R3)
    zero = MultiPoly.zero(R3)
    assert minors(PolyMatrix([[x, zero], [zero, y]]), 2) == [x * y]
    R9 = Ring([f"a{i}{j}" for i in range(3) for j in range(3)])
    A = PolyMatrix([[MultiPoly.var(f"a{i}{j}", R9) for j in range(3)] for i in range(3)])
    (d,) = minors(A, 3)
    assert len(d.terms) == 6
    with pytest.raises(ValueError):
        minors(A, 0)


def test_minors_lexicographic_order():
    R = Ring(["a", "b", "c", "d", "e", "f"])
    a, b, c, d, e, f = (MultiPoly.var(v, R) for v in R.names)
    M = PolyMatrix([[a, b, c], [d, e, f]])
    assert minors(M, 2) == [a * e - b * d, a * f - c * d, b * f - c * e]


def test_two_by_two_trace_minor_is_quotient_numerator():
    # [[num, num'], [den, den']] has the single minor num*den' - num'*den
    R = Ring(["t"])
    t = MultiPoly.var("t", R)
    num, den = t ** 3 + 2, t ** 2 + 1
    (m,) = minors(PolyMatrix([[num, num.diff("t")], [den, den.diff("t")]]), 2)
    assert m == num * den.diff("t") - num.diff("t") * den


def test_jacobian_of_pfaffian():
    R = plucker_ring(4)
    J = jacobian([pfaffian4(1, 2, 3, 4)], R.names)
    expected = [poly_parse(s, R) for s in ("x34", "-x24", "x23", "x14", "-x13", "x12")]
    assert J.entries[0] == expected
    const = jacobian([MultiPoly.constant(5, R)], R.names)
    assert all(e.is_zero() for e in const.entries[0])


@given(polys())
def test_mixed_partials_commute(f):
    H = jacobian(jacobian([f], R3.names).entries[0], R3.names)
    for i in range(3):
        for j in range(3):
            assert H[i, j] == H[j, i]


@given(polys(), polys(), polys())
def test_distributivity(f, g, h):
    assert (f + g) * h == f * h + g * h


@given(polys(), polys(), st.sampled_from(["x", "y", "z"]))
def test_derivative_linear_and_leibniz(f, g, v):
    assert (f + g.scale(3)).diff(v) == f.diff(v) + g.diff(v).scale(3)
    assert (f * g).diff(v) == f.diff(v) * g + f * g.diff(v)


@settings(max_examples=50)
@given(polys(), polys(), st.integers(1, 7))
def test_reduction_mod_p_commutes(f, g, d):
    qq = (f * g - f.scale(Fraction(1, d))) ** 2
    fp, gp = f.reduce_mod(P), g.reduce_mod(P)
    gf = (fp * gp - fp.scale(Fraction(1, d))) ** 2
    assert qq.reduce_mod(P) == gf


def test_field_tag_validation():
    with pytest.raises(ValueError):
        GF(101)
    assert GF(65537).p == 65537
    assert QQ.coerce(3) == Fraction(3)
