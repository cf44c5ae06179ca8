"""Buchberger's algorithm, normal forms and standard-monomial bases.

The reduced Gröbner basis of an ideal is unique for a fixed monomial order,
so two runs on generating sets of the same ideal give identical output.
"""

import heapq
import itertools
from dataclasses import dataclass

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_order, check_polynomials, check_same_ring
from .exceptions import NotZeroDimensionalError
from .poly import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)

__all__ = [
    "DEGREVLEX",
    "LEX",
    "GroebnerBasis",
    "MonomialOrder",
    "NormalFormReducer",
    "buchberger",
    "normal_form",
    "quotient_basis",
    "s_polynomial",
]


@dataclass(frozen=True)
class GroebnerBasis:
    """Gröbner basis of an ideal of ``field[variables]``.

    ``generators`` are sorted by leading monomial, ascending.  When
    ``reduced`` is set they are monic and no term of one is divisible by
    another's leading monomial.
    """

    generators: tuple
    order: MonomialOrder
    variables: tuple
    field: object
    reduced: bool = True

    @property
    def leading_monomials(self):
        return tuple(g.leading_monomial(self.order) for g in self.generators)

    def is_unit_ideal(self):
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def is_zero_dimensional(self):
        lms = self.leading_monomials
        n = len(self.variables)
        for i in range(n):
            if not any(all(e == 0 for j, e in enumerate(m) if j != i) for m in lms):
                return False
        return True

    def contains(self, p):
        return normal_form(p, self).is_zero()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _reduce_terms(terms, divisors, key):
    """Fully reduce a term dict by ``divisors`` = [(lm, lc, term dict)].

    Returns the remainder as a term dict.  ``terms`` is consumed.
    """
    remainder = {}
    while terms:
        m = max(terms, key=key)
        c = terms.pop(m)
        for lm, lc, g in divisors:
            if monomial_divides(lm, m):
                q = monomial_quotient(m, lm)
                factor = c / lc
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    tm = tuple(a + b for a, b in zip(gm, q))
                    v = terms.get(tm)
                    v = -factor * gc if v is None else v - factor * gc
                    if v == 0:
                        terms.pop(tm, None)
                    else:
                        terms[tm] = v
                break
        else:
            remainder[m] = c
    return remainder


def s_polynomial(f, g, order=DEGREVLEX):
    """``lcm/LT(f) * f - lcm/LT(g) * g`` with leading terms cancelling."""
    order = check_order(order)
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    cf, cg = f.leading_coefficient(order), g.leading_coefficient(order)
    return f.mul_term(monomial_quotient(lcm, lf), f.field.one / cf) - g.mul_term(
        monomial_quotient(lcm, lg), g.field.one / cg
    )


def buchberger(generators, order=DEGREVLEX):
    """Reduced Gröbner basis of the ideal generated by ``generators``.

    S-pairs are processed by the normal strategy: smallest total degree of
    the lcm first, ties broken by pair index.  Pairs whose leading monomials
    are coprime are skipped (Buchberger's first criterion).
    """
    generators = check_polynomials(generators, allow_empty=False)
    order = check_order(order)
    variables, field = generators[0].variables, generators[0].field
    key = order.key

    basis = []  # term dicts with lm, lc cached
    pairs = []

    def add(terms):
        lm = max(terms, key=key)
        idx = len(basis)
        basis.append((lm, terms[lm], terms))
        for j in range(idx):
            lmj = basis[j][0]
            if all(a == 0 or b == 0 for a, b in zip(lm, lmj)):
                continue
            lcm = monomial_lcm(lm, lmj)
            heapq.heappush(pairs, (sum(lcm), j, idx))

    for g in generators:
        if g.is_zero():
            continue
        rem = _reduce_terms(dict(g.terms()), basis, key)
        if rem:
            add(rem)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        if basis[i] is None or basis[j] is None:
            continue
        lmi, lci, gi = basis[i]
        lmj, lcj, gj = basis[j]
        lcm = monomial_lcm(lmi, lmj)
        s = {}
        for lm, lc, g, sign in ((lmi, lci, gi, 1), (lmj, lcj, gj, -1)):
            q = monomial_quotient(lcm, lm)
            factor = sign / lc
            for gm, gc in g.items():
                tm = tuple(a + b for a, b in zip(gm, q))
                v = s.get(tm)
                v = factor * gc if v is None else v + factor * gc
                if v == 0:
                    s.pop(tm, None)
                else:
                    s[tm] = v
        rem = _reduce_terms(s, [b for b in basis if b is not None], key)
        if rem:
            add(rem)

    return GroebnerBasis(
        _interreduce([b for b in basis if b is not None], order, variables, field),
        order,
        variables,
        field,
        True,
    )


def _interreduce(basis, order, variables, field):
    key = order.key
    # drop elements whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda b: key(b[0]))
    minimal = []
    for b in basis:
        if not any(monomial_divides(m[0], b[0]) for m in minimal):
            minimal.append(b)
    out = []
    for i, (lm, lc, g) in enumerate(minimal):
        others = [m for j, m in enumerate(minimal) if j != i]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce_terms(tail, others, key)
        terms = {m: c / lc for m, c in tail.items()}
        terms[lm] = field.one
        out.append(Polynomial(terms, variables, field))
    return tuple(sorted(out, key=lambda p: key(p.leading_monomial(order))))


def normal_form(p, gb):
    """Remainder of ``p`` on full division by ``gb``.

    No term of the result is divisible by a leading monomial of ``gb``;
    ``p - normal_form(p, gb)`` lies in the ideal.
    """
    check_same_ring(p, gb)
    divisors = [(g.leading_monomial(gb.order), g.leading_coefficient(gb.order), dict(g.terms()))
                for g in gb.generators]
    rem = _reduce_terms(dict(p.terms()), divisors, gb.order.key)
    return Polynomial(rem, p.variables, p.field)


def quotient_basis(gb):
    """Standard monomials of ``gb``, ascending in its order.

    Raises :class:`NotZeroDimensionalError` if there are infinitely many.
    The unit ideal has the empty basis.
    """
    n = len(gb.variables)
    if gb.is_unit_ideal():
        return []
    if not gb.is_zero_dimensional():
        raise NotZeroDimensionalError(
            "quotient ring is infinite-dimensional: some variable has no pure power "
            "among the leading monomials"
        )
    lms = gb.leading_monomials
    bounds = []
    for i in range(n):
        bounds.append(
            min(m[i] for m in lms if all(e == 0 for j, e in enumerate(m) if j != i))
        )
    standard = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(monomial_divides(lm, m) for lm in lms)
    ]
    return sorted(standard, key=gb.order.key)


class NormalFormReducer(TransformerMixin, BaseEstimator):
    """Estimator wrapper: ``fit`` an ideal, ``transform`` polynomials to normal forms.

    Parameters
    ----------
    order : {"degrevlex", "lex"}, default "degrevlex"

    Attributes
    ----------
    basis_ : GroebnerBasis
    standard_monomials_ : list of tuple or None
        ``None`` when the quotient is infinite-dimensional.
    """

    def __init__(self, order="degrevlex"):
        self.order = order

    def fit(self, X, y=None):
        self.basis_ = buchberger(X, self.order)
        try:
            self.standard_monomials_ = quotient_basis(self.basis_)
        except NotZeroDimensionalError:
            self.standard_monomials_ = None
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        return [normal_form(p, self.basis_) for p in check_polynomials(X)]
