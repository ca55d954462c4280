from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_implicit.core.errors import DegenerateSupport, DivisionByZeroError, PolynomialSyntaxError
from toric_implicit.core.poly import BivariatePolynomial, Parametrization, evaluate, parse_polynomial, support

s = BivariatePolynomial.variable("s")
t = BivariatePolynomial.variable("t")


def test_parse_combines_like_terms():
    p = parse_polynomial("s*t + 2*s*t - 3")
    assert p.terms == {(1, 1): 3, (0, 0): -3}


def test_parse_powers_and_parentheses():
    assert parse_polynomial("(s+1)^2") == s * s + 2 * s + 1
    assert parse_polynomial("-(s - t)") == t - s


def test_parse_rationals_and_laurent_exponents():
    p = parse_polynomial("3/4*s^-1*t^2")
    assert p.terms == {(-1, 2): Fraction(3, 4)}
    assert p.is_laurent()


def test_parse_example4_polynomial():
    p = parse_polynomial("s*t^4+5*s^2*t^6")
    assert support(p) == {(1, 4), (2, 6)}


def test_printed_form_round_trips():
    p = parse_polynomial("2*s*t^6 + 3/4 - s^-1*t")
    assert str(p) == "2*s*t^6 + 3/4 - s^-1*t"
    assert parse_polynomial(str(p)) == p


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("s*", 2),
    ("s t", 2),
    ("1/0", 2),
    ("(s+t", 4),
    ("s^x", 2),
    ("s + #", 4),
])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(PolynomialSyntaxError) as excinfo:
        parse_polynomial(text)
    assert excinfo.value.position == position


def test_negative_exponent_needs_single_term_base():
    with pytest.raises(PolynomialSyntaxError) as excinfo:
        parse_polynomial("(s+1)^-1")
    assert excinfo.value.position == 5
    assert excinfo.value.pointer().endswith("     ^")


def test_evaluate():
    p = parse_polynomial("s*t^6+2")
    assert evaluate(p, 1, 1) == 3
    assert evaluate(p, Fraction(1, 2), 2) == 34


def test_evaluate_laurent_at_zero():
    with pytest.raises(DivisionByZeroError):
        evaluate(parse_polynomial("s^-1 + t"), 0, 1)


def test_zero_polynomial():
    z = parse_polynomial("s - s")
    assert z.is_zero()
    assert str(z) == "0"
    assert support(z) == frozenset()


def test_parametrization_rejects_collinear_support():
    with pytest.raises(DegenerateSupport):
        Parametrization.from_strings(["s", "s^2", "1", "s^3"])


def test_parametrization_rejects_all_zero():
    with pytest.raises(DegenerateSupport):
        Parametrization.from_strings(["0", "0", "0", "0"])


def test_parametrization_evaluates_example4():
    f = Parametrization.from_strings(["s*t^6+2", "s*t^5-3*s*t^3", "s*t^4+5*s^2*t^6", "2+s^2*t^6"])
    assert f.evaluate(1, 1) == (3, -2, 6, 3)
    assert f.common_monomial_factor() == (0, 0)


def test_common_monomial_factor():
    f = Parametrization.from_strings(["s*t", "s^2*t", "s*t^2", "s^2*t^2"])
    assert f.common_monomial_factor() == (1, 1)


polys = st.dictionaries(
    st.tuples(st.integers(-2, 3), st.integers(-2, 3)),
    st.fractions(min_value=-10, max_value=10, max_denominator=5).filter(lambda c: abs(c) < 10),
    max_size=5,
).map(BivariatePolynomial)
points = st.tuples(
    st.fractions(min_value=Fraction(1, 7), max_value=5, max_denominator=7),
    st.fractions(min_value=Fraction(1, 7), max_value=5, max_denominator=7),
)


@settings(max_examples=80, deadline=None)
@given(polys, polys, points)
def test_evaluation_is_a_ring_homomorphism(p, q, point):
    a, b = point
    assert evaluate(p + q, a, b) == evaluate(p, a, b) + evaluate(q, a, b)
    assert evaluate(p * q, a, b) == evaluate(p, a, b) * evaluate(q, a, b)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_printing_round_trips(p):
    assert parse_polynomial(str(p)) == p


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_product_support_lies_in_minkowski_sum(p, q):
    minkowski = {(a[0] + b[0], a[1] + b[1]) for a in support(p) for b in support(q)}
    assert support(p * q) <= minkowski
