from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptchain.algebra import ONE, ZERO, A, B, LaurentPoly, Q, parse_rational

from samples import box_rationals, polys


def test_addition_examples():
    p = Q * A.monomial_inverse()
    assert p + ZERO == p
    assert (p + (-p)).is_zero()
    assert (p + (-p)).terms == {}
    f11 = p + A.monomial_inverse() + B.monomial_inverse()
    assert len(f11) == 3


def test_multiplication_examples():
    p = LaurentPoly.monomial(1, 2, -1, 0) * LaurentPoly.monomial(1, 1, 0, -1)
    assert p == LaurentPoly.monomial(1, 3, -1, -1)
    assert p * ONE == p
    assert (p * ZERO).is_zero()


def test_evaluate_examples():
    p = LaurentPoly.monomial(1, 1, -1, 0) + LaurentPoly.monomial(1, 0, 0, -1)
    assert p.evaluate(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)) == 3
    assert p.evaluate(1, 1, 1) == 2
    assert LaurentPoly.monomial(1, 0, 0, -1).evaluate(0, 1, Fraction(1, 2)) == 2


def test_evaluate_zero_base_negative_exponent():
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.monomial(1, -1, 0, 0).evaluate(0, 1, 1)


def test_text_form():
    z1 = A.monomial_inverse() + B.monomial_inverse()
    assert str(z1) == "1 * q^0 * a^-1 * b^0 + 1 * q^0 * a^0 * b^-1"
    assert str(ZERO) == "0"
    assert str(LaurentPoly.constant(Fraction(-3, 4))) == "-3/4 * q^0 * a^0 * b^0"


def test_parse_rational_rejects_floats():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-2") == -2
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_monomial_inverse():
    m = LaurentPoly.monomial(Fraction(2, 3), 1, -2, 3)
    assert m * m.monomial_inverse() == ONE
    with pytest.raises(ValueError):
        (A + B).monomial_inverse()


@given(polys, polys, polys)
def test_ring_axioms(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p - p == ZERO


@given(polys, polys, box_rationals, box_rationals, box_rationals)
def test_evaluation_is_a_ring_homomorphism(p, r, q, a, b):
    assert (p + r).evaluate(q, a, b) == p.evaluate(q, a, b) + r.evaluate(q, a, b)
    assert (p * r).evaluate(q, a, b) == p.evaluate(q, a, b) * r.evaluate(q, a, b)


@given(polys)
def test_parse_round_trip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(polys)
def test_swap_is_an_involution(p):
    assert p.swap_ab().swap_ab() == p


@given(polys)
def test_equal_polys_hash_equal(p):
    assert hash(p) == hash(LaurentPoly(dict(p.terms)))


@pytest.mark.parametrize("bad", ["", "1 * q^0", "1 * x^0 * a^0 * b^0", "1 * q0 * a^0 * b^0"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        LaurentPoly.parse(bad)


def test_parse_rejects_float_coefficient_types():
    with pytest.raises(TypeError):
        LaurentPoly.constant(0.5)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_monomials_sort_ascending(i, j, k):
    p = LaurentPoly.monomial(1, i, j, k) + LaurentPoly.monomial(1, i + 1, j, k)
    assert str(p).index(f"q^{i} ") < str(p).index(f"q^{i + 1} ")
