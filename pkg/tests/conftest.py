from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from infdef.artin import algebra_from_quotient, morphism_from_images, truncated_polynomial_algebra
from infdef.poly import Polynomial, parse_poly

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

XY = ("x", "y")


def P(text, variables=XY):
    return parse_poly(text, variables)


coefficients = st.builds(
    Fraction, st.integers(-9, 9).filter(bool), st.integers(1, 4)
)


@st.composite
def polynomials(draw, variables=XY, max_terms=8, max_degree=6):
    n = len(variables)
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(
        lambda e: sum(e) <= max_degree
    )
    terms = draw(st.dictionaries(exps.map(tuple), coefficients, max_size=max_terms))
    return Polynomial(terms, variables)


def quotient(variables, *gens):
    return algebra_from_quotient(variables, [parse_poly(g, variables) for g in gens])


def images_map(source, target, *texts):
    """Morphism sending the source variables to polynomials in the target variables."""
    names = target.presentation[0] if target.presentation else ()
    images = [
        target.coordinates_of_polynomial(parse_poly(t, names)) if names else [Fraction(0)]
        for t in texts
    ]
    return morphism_from_images(source, target, images)


@pytest.fixture(scope="session")
def fleet():
    """Fibered-product test triples ``(p, q)`` with ``q`` surjective."""
    from infdef.artin import dual_numbers, identity_morphism, residue_map

    e = dual_numbers("e")
    t2 = truncated_polynomial_algebra("t", 2)
    t3 = truncated_polynomial_algebra("t", 3)
    t4 = truncated_polynomial_algebra("t", 4)
    s2 = truncated_polynomial_algebra("s", 2)
    s3 = truncated_polynomial_algebra("s", 3)
    m2 = quotient(XY, "x^2", "x*y", "y^2")
    m3 = quotient(XY, "x^3", "x^2*y", "x*y^2", "y^3")
    sq = quotient(XY, "x^2", "y^2")
    return [
        (residue_map(e), residue_map(e)),
        (images_map(t3, t2, "t"), images_map(t3, t2, "t")),
        (residue_map(t3), residue_map(s2)),
        (images_map(m2, t2, "t", "0"), images_map(t3, t2, "t")),
        (images_map(sq, t2, "t", "t"), images_map(s3, t2, "t")),
        (identity_morphism(t3), identity_morphism(t3)),
        (images_map(t4, t3, "t"), images_map(t4, t3, "t")),
        (residue_map(m3), residue_map(t2)),
        (images_map(t4, t2, "t"), images_map(sq, t2, "t", "0")),
        (images_map(s2, t3, "t^2"), images_map(t4, t3, "t")),
        (images_map(m2, t2, "t", "2*t"), identity_morphism(t2)),
        (residue_map(m2), residue_map(m3)),
    ]
