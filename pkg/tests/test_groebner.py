import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sklearn.base import clone

from conftest import XY, P, polynomials
from infdef.exceptions import NotZeroDimensionalError
from infdef.groebner import (
    DEGREVLEX,
    LEX,
    NormalFormReducer,
    buchberger,
    normal_form,
    quotient_basis,
    s_polynomial,
)
from infdef.poly import Polynomial, parse_poly
from oracles import long_division, quotient_dim_oracle

XYZ = ("x", "y", "z")

ZERO_DIM_IDEALS = [
    (XY, ["y", "x^2"]),
    (XY, ["x", "y"]),
    (XY, ["x^2 - y", "y^2 - x"]),
    (XY, ["y^2 - x^3", "2*y", "3*x^2"]),
    (XY, ["x^2 + y^2", "x*y"]),
    (XY, ["x^3 + y^4", "3*x^2", "4*y^3"]),
    (XY, ["x*y", "y", "x"]),
    (XY, ["x^2 + y^3", "2*x", "3*y^2"]),
    (XY, ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
    (XYZ, ["x^2", "y^2", "z^2"]),
    (XYZ, ["x^2 + y^2 + z^2", "2*x", "2*y", "2*z"]),
    (XYZ, ["x*y - z", "y*z - x", "z*x - y", "x^2 + y^2 + z^2 - 3"]),
]


def gb_of(variables, texts, order=DEGREVLEX):
    return buchberger([parse_poly(t, variables) for t in texts], order)


def test_already_reduced():
    assert list(gb_of(XY, ["x", "y"])) == [P("y"), P("x")]


def test_cusp_jacobian_ideal():
    assert list(gb_of(XY, ["y^2 - x^3", "2*y", "3*x^2"])) == [P("y"), P("x^2")]


def test_two_parabolas_dimension_four():
    # oracle: y = x^2 turns y^2 = x into x^4 - x, squarefree of degree 4
    x = sympy.symbols("x")
    elim = sympy.Poly(x**4 - x, x)
    assert sympy.gcd(elim, elim.diff(x)) == 1
    assert len(quotient_basis(gb_of(XY, ["x^2 - y", "y^2 - x"]))) == elim.degree()


def test_lex_basis_matches_sympy():
    # sympy as a reference implementation for a lex basis
    x, y = sympy.symbols("x y")
    ours = gb_of(XY, ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"], LEX)
    ref = sympy.groebner([x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x], x, y, order="lex")
    assert sorted(str(g) for g in ours) == sorted(
        str(parse_poly(str(sympy.expand(g / sympy.Poly(g, x, y).LC(order="lex"))).replace("**", "^"), XY))
        for g in ref.exprs
    )


def test_zero_ideal_is_empty_basis():
    gb = buchberger([Polynomial.zero(XY)])
    assert len(gb) == 0
    assert normal_form(P("x^2 + 1"), gb) == P("x^2 + 1")
    with pytest.raises(NotZeroDimensionalError):
        quotient_basis(gb)


def test_unit_ideal():
    gb = gb_of(XY, ["x", "x + 1"])
    assert list(gb) == [P("1")]
    assert quotient_basis(gb) == []
    assert normal_form(P("x^5 + 3"), gb).is_zero()


@pytest.mark.parametrize(
    "text, expected", [("1 + x", "1 + x"), ("x^3", "0"), ("3*x*y + x", "x")]
)
def test_normal_form_examples(text, expected):
    gb = gb_of(XY, ["y", "x^2"])
    assert normal_form(P(text), gb) == P(expected)
    # long-division oracle on the same basis
    rem = long_division(dict(P(text).terms()), [dict(g.terms()) for g in gb], DEGREVLEX.key)
    assert rem == dict(P(expected).terms())


def test_quotient_basis_examples():
    assert quotient_basis(gb_of(XY, ["y", "x^2"])) == [(0, 0), (1, 0)]
    assert quotient_basis(gb_of(XY, ["x", "y"])) == [(0, 0)]
    with pytest.raises(NotZeroDimensionalError):
        quotient_basis(gb_of(XY, ["x"]))


def _all_pairs_reduce(gb):
    gens = list(gb)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not normal_form(s_polynomial(gens[i], gens[j], gb.order), gb).is_zero():
                return False
    return True


def _is_reduced(gb):
    lms = gb.leading_monomials
    for g, lm in zip(gb, lms):
        if g.leading_coefficient(gb.order) != 1:
            return False
        for m in g.monomials():
            for other in lms:
                if other != lm and all(a >= b for a, b in zip(m, other)):
                    return False
    return True


@pytest.mark.parametrize("variables, texts", ZERO_DIM_IDEALS)
@pytest.mark.parametrize("order", [DEGREVLEX, LEX])
def test_buchberger_criterion_and_membership(variables, texts, order):
    gens = [parse_poly(t, variables) for t in texts]
    gb = buchberger(gens, order)
    assert _all_pairs_reduce(gb)
    assert _is_reduced(gb)
    for g in gens:
        assert normal_form(g, gb).is_zero()
    # the reduced basis is unique: recomputing from it gives it back
    assert list(buchberger(list(gb), order)) == list(gb)


@pytest.mark.parametrize("variables, texts", ZERO_DIM_IDEALS)
def test_quotient_dimension_matches_truncated_linear_algebra(variables, texts):
    gens = [parse_poly(t, variables) for t in texts]
    expected = quotient_dim_oracle([dict(g.terms()) for g in gens], len(variables))
    assert len(quotient_basis(buchberger(gens))) == expected


@given(polynomials(max_degree=5), polynomials(max_degree=5), st.integers(-5, 5), st.integers(-5, 5))
def test_normal_form_idempotent_and_linear(p, q, a, b):
    gb = gb_of(XY, ["x^2 - y", "y^2 - x"])
    nf = lambda r: normal_form(r, gb)  # noqa: E731
    assert nf(nf(p)) == nf(p)
    assert nf(p * a + q * b) == nf(p) * a + nf(q) * b
    # remainder has no term divisible by a leading monomial
    for m in nf(p).monomials():
        assert not any(all(x >= y for x, y in zip(m, lm)) for lm in gb.leading_monomials)


@given(polynomials(max_degree=4), polynomials(max_degree=4))
def test_generic_ideals_satisfy_buchberger_criterion(p, q):
    gens = [g for g in (p, q) if not g.is_zero()]
    if not gens:
        return
    gb = buchberger(gens)
    assert _all_pairs_reduce(gb)
    for g in gens:
        assert normal_form(g, gb).is_zero()


def test_generator_order_does_not_matter():
    a = gb_of(XY, ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"])
    b = gb_of(XY, ["x^2*y - 2*y^2 + x", "x^3 - 2*x*y"])
    assert list(a) == list(b)


def test_normal_form_reducer_estimator():
    est = NormalFormReducer()
    assert est.get_params() == {"order": "degrevlex"}
    est.fit([P("y^2 - x^3"), P("2*y"), P("3*x^2")])
    assert est.standard_monomials_ == [(0, 0), (1, 0)]
    assert est.transform([P("3*x*y + x"), P("x^3")]) == [P("x"), P("0")]
    assert clone(est).get_params() == est.get_params()
    assert NormalFormReducer(order="lex").fit([P("x")]).standard_monomials_ is None


def test_reducer_requires_fit():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        NormalFormReducer().transform([P("x")])


def test_prime_field_basis():
    from infdef.field import GF

    F = GF(5)
    gens = [parse_poly(t, XY, F) for t in ["y^2 - x^3", "2*y", "3*x^2"]]
    gb = buchberger(gens)
    assert [str(g) for g in gb] == ["y", "x^2"]
    assert gb.generators[0].leading_coefficient() == 1
