from fractions import Fraction

import pytest
from hypothesis import given

from conftest import XY, P, polynomials
from infdef.exceptions import FieldError, ParseError, RingMismatchError, UnknownVariableError
from infdef.field import GF, QQ, field_from_string
from infdef.poly import LEX, Polynomial, jacobian, mul, parse_poly
from oracles import dense_product


def test_parse_single_monomial():
    p = P("x*y")
    assert dict(p.terms()) == {(1, 1): 1}


def test_parse_cusp():
    p = P("y^2 - x^3")
    assert dict(p.terms()) == {(0, 2): 1, (3, 0): -1}


def test_parse_zero():
    p = parse_poly("0", ["x"])
    assert p.is_zero() and dict(p.terms()) == {}


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-2/5*x + 3", {(1, 0): Fraction(-2, 5), (0, 0): 3}),
        ("  x ^ 2 *  y  ", {(2, 1): 1}),
        ("x - x", {}),
        ("2*3*x", {(1, 0): 6}),
        ("(x + y)^2", {(2, 0): 1, (1, 1): 2, (0, 2): 1}),
        ("-x^0", {(0, 0): -1}),
    ],
)
def test_parse_grammar(text, expected):
    assert dict(P(text).terms()) == expected


@pytest.mark.parametrize(
    "text, position",
    [("x +", 3), ("x ** 2", 3), ("x $ y", 2), ("2x", 1), ("", 0), ("x^y", 2)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.position == position


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError):
        P("x*z")


def test_parse_zero_denominator():
    with pytest.raises(ParseError):
        P("1/0*x")


def test_parse_coefficient_not_in_prime_field():
    with pytest.raises(FieldError):
        parse_poly("1/7*x", ["x"], GF(7))
    assert parse_poly("1/2*x", ["x"], GF(7)) == parse_poly("4*x", ["x"], GF(7))


def test_format_canonical_order():
    assert P("y^2 - x^3").format() == "-x^3 + y^2"
    assert P("y^2 - x^3").format(LEX) == "-x^3 + y^2"
    assert P("x + y^2").format(LEX) == "x + y^2"
    assert P("-2/5*x*y + 7").format() == "-2/5*x*y + 7"


def test_difference_of_squares():
    assert mul(P("x+y"), P("x-y")) == P("x^2 - y^2")


@given(polynomials())
def test_one_is_identity(p):
    assert mul(Polynomial.constant(1, XY), p) == p


@given(polynomials(), polynomials())
def test_product_matches_dense_convolution(p, q):
    expected = dense_product(dict(p.terms()), dict(q.terms()), 2)
    assert dict(mul(p, q).terms()) == expected


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p - p == Polynomial.zero(XY)


def test_mul_ring_mismatch():
    with pytest.raises(RingMismatchError):
        mul(P("x"), parse_poly("x", ["x", "z"]))
    with pytest.raises(RingMismatchError):
        mul(P("x"), parse_poly("x", XY, GF(5)))


def test_jacobian_examples():
    assert jacobian(P("x*y")) == (P("y"), P("x"))
    assert jacobian(P("y^2 - x^3")) == (P("-3*x^2"), P("2*y"))
    assert jacobian(P("5")) == (P("0"), P("0"))


@given(polynomials(), polynomials())
def test_leibniz_rule(p, q):
    jp, jq, jpq = jacobian(p), jacobian(q), jacobian(p * q)
    for i in range(2):
        assert jpq[i] == p * jq[i] + q * jp[i]


@given(polynomials())
def test_format_parse_roundtrip(p):
    assert parse_poly(p.format(), XY) == p
    assert parse_poly(p.format(LEX), XY) == p


def test_prime_field_arithmetic():
    F = GF(3)
    p = parse_poly("x^3 + 2*x", ["x"], F)
    assert jacobian(p) == (parse_poly("2", ["x"], F),)
    assert parse_poly("2*x", ["x"], F) * parse_poly("2*x", ["x"], F) == parse_poly("x^2", ["x"], F)
    assert parse_poly(str(p), ["x"], F) == p


def test_field_descriptors():
    assert field_from_string("Q") is QQ
    assert field_from_string("Fp:7") == GF(7)
    with pytest.raises(FieldError):
        field_from_string("Fp:8")
    with pytest.raises(FieldError):
        field_from_string("R")


def test_polynomials_are_hashable_and_immutable_values():
    p, q = P("x + y"), P("y + x")
    assert hash(p) == hash(q) and {p: 1}[q] == 1
