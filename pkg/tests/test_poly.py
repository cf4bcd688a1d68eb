from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from folint.poly import Poly, X, gcd, monomials_of_degree, parse_poly

x0, x1, x2 = sympy.symbols("X0 X1 X2")

exps = st.tuples(*[st.integers(0, 3)] * 3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exps, coeffs, max_size=6).map(Poly)


def to_sympy(p):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * x0**e[0] * x1**e[1] * x2**e[2]
                            for e, c in p.terms.items()))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == Poly.zero()


@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys, polys)
def test_exact_divide_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_divide(b) == a
    assert b.divides(a * b)


def test_exact_divide_rejects_non_multiple():
    assert (X(0) ** 2 + X(1)).exact_divide(X(0)) is None
    assert not X(0).divides(X(1))


@given(polys, st.tuples(coeffs, coeffs, coeffs))
def test_translate_is_substitution(p, pt):
    q = p.translate(pt)
    sub = to_sympy(p).subs({x0: x0 + sympy.Rational(pt[0].numerator, pt[0].denominator),
                            x1: x1 + sympy.Rational(pt[1].numerator, pt[1].denominator),
                            x2: x2 + sympy.Rational(pt[2].numerator, pt[2].denominator)}, simultaneous=True)
    assert to_sympy(q) == sympy.expand(sub)
    assert q.translate(tuple(-c for c in pt)) == p


@given(polys)
def test_parse_round_trip(p):
    assert parse_poly(str(p)) == p


@given(polys)
def test_list_round_trip(p):
    assert Poly.from_list(p.to_list(), 3) == p


def test_parse_rejects_bad_input():
    for bad in ["X3", "X0^-1", "X0/X1", "import os", "X0**1001", "(X0"]:
        with pytest.raises(ValueError):
            parse_poly(bad)


def test_parse_rational_coefficients():
    p = parse_poly("3/2*X0^2 - X1*X2")
    assert p.coeff((2, 0, 0)) == Fraction(3, 2)
    assert p.coeff((0, 1, 1)) == -1
    assert p.is_homogeneous() and p.degree == 2


@given(st.integers(0, 6))
def test_monomial_count(d):
    ms = monomials_of_degree(d, 3)
    assert len(ms) == (d + 1) * (d + 2) // 2
    assert len(set(ms)) == len(ms)
    assert all(sum(e) == d for e in ms)


def test_order_and_truncate():
    p = parse_poly("X0^2*X1 + X1^2 + X0^4")
    assert p.order() == 2
    assert p.truncate(3) == parse_poly("X1^2")
    with pytest.raises(ValueError):
        Poly.zero().order()


def test_dehomogenize_and_divide():
    F = parse_poly("X0^2*X2 - X1^3")
    f = F.dehomogenize(2)
    assert f.nvars == 2
    assert f == Poly({(2, 0): 1, (0, 3): -1}, 2)
    g = Poly({(3, 1): 2, (2, 2): 1}, 2)
    assert g.content_power(0) == 2
    assert g.divide_by_var_power(0, 2) == Poly({(1, 1): 2, (0, 2): 1}, 2)


@settings(max_examples=40)
@given(polys, polys, polys)
def test_gcd_contains_common_factor(a, b, c):
    if c.is_zero() or c.is_constant() or a.is_zero() or b.is_zero():
        return
    g = gcd(a * c, b * c)
    assert c.divides(g)
    assert g.divides(a * c) and g.divides(b * c)
