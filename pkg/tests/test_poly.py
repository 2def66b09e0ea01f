from fractions import Fraction

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from bmsturm.poly import (
    MINUS_INFINITY,
    DegenerateInputError,
    Poly,
    ZeroPolynomialError,
    binomial,
    derivative,
    divrem,
    evaluate,
    gcd,
    poly_arith,
    primitive_ints,
    pseudo_rem,
    sign_at,
    squarefree_part,
)

from conftest import P, polys, small_rationals


def test_mul_difference_of_squares():
    assert poly_arith("mul", P(1, 1), P(-1, 1)) == P(-1, 0, 1)


def test_add_zero_identity():
    f = P("3/2", 1)
    assert poly_arith("add", f, Poly.zero()) == f


def test_scale_bm_row_two():
    got = poly_arith("scale", P(42, 60, 24), Fraction(1, 16))
    assert got == P("21/8", "15/4", "3/2")


def test_scale_needs_rational():
    with pytest.raises(TypeError):
        poly_arith("scale", P(1, 1), P(1))


def test_derivative_examples():
    assert derivative(P(-1, 0, 1)) == P(0, 2)
    assert derivative(P(7)) == Poly.zero()
    assert derivative(P("21/8", "15/4", "3/4")) == P("15/4", "3/2")


def test_evaluate_examples():
    assert evaluate(P(-1, 0, 1), 2) == 3
    assert evaluate(P("3/2", 1), 0) == Fraction(3, 2)
    assert evaluate(Poly.zero(), Fraction(5, 7)) == 0


def test_divrem_examples():
    assert divrem(P(-1, 0, 1), P(0, 1)) == (P(0, 1), P(-1))
    assert divrem(P(0, 0, 0, 1), P(1, 0, 1)) == (P(0, 1), P(0, -1))
    f = P(3, "1/2", -7)
    assert divrem(f, P(4)) == (f.scale(Fraction(1, 4)), Poly.zero())


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(P(1, 1), Poly.zero())


def test_gcd_examples():
    assert gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert gcd(P(1, 0, 1), P(0, 1)) == P(1)
    assert gcd(P(1, -2, 1), P(-2, 2)) == P(-1, 1)


def test_gcd_both_zero():
    with pytest.raises(ZeroPolynomialError):
        gcd(Poly.zero(), Poly.zero())


def test_squarefree_examples():
    assert squarefree_part(P(1, -2, 1)) == P(-1, 1)
    assert squarefree_part(P(0, 0, 0, 1)) == P(0, 1)
    assert squarefree_part(P(-1, 0, 1)) == P(-1, 0, 1)
    with pytest.raises(ZeroPolynomialError):
        squarefree_part(Poly.zero())


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert binomial(2, 3) == 0
    assert binomial(3, -1) == 0
    assert binomial(-2, 1) == 0


def test_zero_degree_marker():
    z = Poly.zero()
    assert z.degree is MINUS_INFINITY
    assert z.degree < 0
    with pytest.raises(TypeError):
        z.degree + 1
    assert P(5).degree == 0
    assert z.is_standard() and P(-1, 2).is_standard() and not P(1, -2).is_standard()


def test_normalization_drops_leading_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0) == Poly.zero()


def test_text_form_round_trip():
    f = P("21/8", "15/4", "3/2")
    assert str(f) == "[21/8, 15/4, 3/2]"
    assert Poly.parse(str(f)) == f
    assert str(P(7, "1/2")) == "[7, 1/2]"
    assert Poly.parse("[]") == Poly.zero()


def test_floats_rejected():
    with pytest.raises(TypeError):
        Poly([0.5])


def test_compose_shift():
    # (x+1)^2 shifted by -1 is x^2
    assert P(1, 2, 1).compose_shift(-1) == P(0, 0, 1)


@given(polys(), polys(), polys())
def test_distributive(f, g, h):
    assert (f + g) * h == f * h + g * h


@given(polys(), polys())
def test_mul_commutes_and_degree_adds(f, g):
    assert f * g == g * f
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == f.degree + g.degree


@given(polys(), polys(nonzero=True))
def test_divrem_round_trip(f, g):
    q, r = divrem(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(polys(), polys(), small_rationals, small_rationals)
def test_derivative_linear(f, g, a, b):
    assert derivative(f.scale(a) + g.scale(b)) == derivative(f).scale(a) + derivative(g).scale(b)


@given(polys(nonzero=True))
def test_squarefree_part_properties(f):
    s = squarefree_part(f)
    _, r = divrem(f, s)
    assert r.is_zero()
    assert s.leading == 1
    assert gcd(s, derivative(s)).degree == 0


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.lists(st.integers(-4, 4), max_size=4))
def test_squarefree_of_known_factorization(roots, extra):
    f = Poly.from_roots(roots + extra + roots)
    assert squarefree_part(f) == Poly.from_roots(sorted(set(roots + extra)))


@given(polys(), polys())
def test_gcd_divides_both(f, g):
    assume(not (f.is_zero() and g.is_zero()))
    h = gcd(f, g)
    assert h.leading == 1
    for p in (f, g):
        assert divrem(p, h)[1].is_zero()


@given(polys(nonzero=True), polys(nonzero=True), polys(nonzero=True))
def test_gcd_recovers_common_factor(a, b, c):
    h = gcd(a * c, b * c)
    assert divrem(h, c.monic())[1].is_zero()


@given(polys(nonzero=True), small_rationals)
def test_integer_helpers_preserve_signs(f, x):
    ints = primitive_ints(f)
    v = evaluate(f, x)
    assert sign_at(ints, x) == (v > 0) - (v < 0)


@given(polys(nonzero=True), polys(nonzero=True))
def test_pseudo_rem_is_positive_multiple(f, g):
    assume(g.degree >= 1)
    a, b = primitive_ints(f), primitive_ints(g)
    r = pseudo_rem(a, b)
    _, true_r = divrem(Poly(a), Poly(b))
    if true_r.is_zero():
        assert not r
    else:
        ratio = Poly(r).leading / true_r.leading
        assert ratio > 0
        assert Poly(r) == true_r.scale(ratio)


def test_rationals_stay_normalized():
    f = P("2/4", "-6/8") * P("3/9", 1)
    for c in f.coeffs:
        assert c.denominator > 0
        assert Fraction(c.numerator, c.denominator) == c
