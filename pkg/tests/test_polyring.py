from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apartition.polyring import (
    RatPolynomial,
    add,
    evaluate,
    formal_derivative,
    mul,
    parse_rational,
    scale,
    shift_mul_x,
)

X = RatPolynomial.x()

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(RatPolynomial)


def test_table1_row2_product():
    p = scale(mul(X, X + 3), Fraction(1, 2))
    assert p.coeffs == (0, Fraction(3, 2), Fraction(1, 2))


def test_add_zero_identity():
    p = RatPolynomial([1, 2, 3])
    assert add(p, RatPolynomial()) == p


def test_x_times_x_minus_3_over_2():
    p = scale(mul(X - 3, X), Fraction(1, 2))
    assert list(p.coeffs) == [0, Fraction(-3, 2), Fraction(1, 2)]


def test_shift_mul_x():
    assert shift_mul_x(RatPolynomial([1, 2])) == RatPolynomial([0, 1, 2])
    assert shift_mul_x(RatPolynomial()).is_zero()


def test_normalization():
    p = RatPolynomial([1, 0, 0])
    assert p.degree == 0
    assert RatPolynomial([0, 0]).degree == -1
    assert (RatPolynomial([1, 1]) - RatPolynomial([0, 1])) == RatPolynomial([1])


def test_eval_examples():
    assert evaluate(scale(mul(X, X + 3), Fraction(1, 2)), 3) == 9
    assert evaluate(scale(mul(X, X + 5), Fraction(1, 2)), 5) == 25
    p = RatPolynomial([Fraction(7, 3), 4, 5])
    assert evaluate(p, 0) == Fraction(7, 3)


def test_derivative_examples():
    p = scale(mul(X, X + 3), Fraction(1, 2))
    assert formal_derivative(p) == RatPolynomial([Fraction(3, 2), 1])
    assert formal_derivative(RatPolynomial([5])).is_zero()
    assert evaluate(formal_derivative(mul(X, X)), 1) == 2


def test_substitute_scaled():
    p = RatPolynomial([1, 2, 3])
    assert p.substitute_scaled(2) == RatPolynomial([1, 4, 12])


def test_strings_roundtrip():
    p = RatPolynomial([0, Fraction(-3, 2), Fraction(1, 2)])
    assert p.to_strings() == ["0/1", "-3/2", "1/2"]
    assert RatPolynomial.from_strings(p.to_strings()) == p


def test_str():
    assert str(scale(mul(X, X + 3), Fraction(1, 2))) == "1/2*(x^2 + 3*x)"
    assert str(RatPolynomial([-1, 0, 1])) == "x^2 - 1"
    assert str(RatPolynomial()) == "0"


@pytest.mark.parametrize("text, value", [("3", 3), ("-3/6", Fraction(-1, 2)), ("15/2", Fraction(15, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "a", "", "1/-2", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys, fractions)
def test_eval_is_multiplicative(p, q, x0):
    assert (p * q)(x0) == p(x0) * q(x0)
    assert (p + q)(x0) == p(x0) + q(x0)


@given(polys, polys)
def test_degree_additive(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys, fractions)
def test_derivative_product_rule_at_point(p, x0):
    q = RatPolynomial([1, x0, 2])
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert lhs == rhs


def test_immutable():
    p = RatPolynomial([1])
    with pytest.raises(AttributeError):
        p.coeffs = ()
