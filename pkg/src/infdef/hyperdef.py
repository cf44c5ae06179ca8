"""Deformations of an affine hypersurface ``V(f)`` with isolated singularities.

The tangent space of the deformation functor is the Tjurina algebra
``k[x]/(f, df/dx_1, ..., df/dx_n)``; a first-order deformation ``f + eps*g``
is labelled by the class of ``g`` there.  A deformation over an artinian
algebra ``A`` is stored as one polynomial in ``x`` per basis element of
``A``.
"""

from dataclasses import dataclass

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import linalg
from ._validation import check_polynomial, check_polynomials, check_same_ring
from .artin import FiniteKAlgebra, fibered_product
from .exceptions import (
    AssignmentError,
    ConstantPolynomialError,
    IncompatibleDeformationsError,
    MorphismError,
    NonIsolatedSingularityError,
    NotSmallExtensionError,
    NotZeroDimensionalError,
    ParameterError,
    StabilizationError,
)
from .field import field_from_string
from .groebner import buchberger, normal_form, quotient_basis
from .linalg import SparseEchelon
from .poly import DEGREVLEX, Polynomial, as_order, jacobian, parse_poly


@dataclass(frozen=True, eq=False)
class TjurinaData:
    """Tjurina algebra of ``f``: Gröbner basis of ``(f, df)``, dimension and monomial basis."""

    f: Polynomial
    gb: object
    tjurina_number: int
    basis: tuple

    def basis_polynomials(self):
        return [Polynomial.monomial(m, self.f.variables, self.f.field) for m in self.basis]

    def basis_labels(self):
        return [str(p) for p in self.basis_polynomials()]


def tjurina(f, order=DEGREVLEX):
    """Tjurina data of ``f``.

    Raises :class:`NonIsolatedSingularityError` when ``(f, df)`` has an
    infinite-dimensional quotient.
    """
    check_polynomial(f, "f")
    if f.is_constant():
        raise ConstantPolynomialError("f must be nonconstant")
    gb = buchberger([f, *jacobian(f)], as_order(order))
    try:
        basis = quotient_basis(gb)
    except NotZeroDimensionalError as exc:
        raise NonIsolatedSingularityError(
            f"{f} has non-isolated singularities: the Tjurina algebra is infinite-dimensional"
        ) from exc
    return TjurinaData(f, gb, len(basis), tuple(basis))


def ks_class(td, g):
    """Kodaira–Spencer coordinates of ``f + eps*g``: the class of ``g`` in the Tjurina basis."""
    check_same_ring(g, td.f)
    nf = normal_form(g, td.gb)
    index = {m: i for i, m in enumerate(td.basis)}
    out = [td.f.field.zero] * td.tjurina_number
    for m, c in nf.terms():
        out[index[m]] = c
    return tuple(out)


def _fresh_names(prefix, count, taken):
    names = []
    i = 1
    while len(names) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            names.append(name)
        i += 1
    return tuple(names)


@dataclass(frozen=True, eq=False)
class MiniversalFamily:
    """The family ``F = f + sum_i t_i g_i`` over ``k[[t_1, ..., t_m]]``.

    ``family`` lives in ``k[x, t]``.  ``kodaira_spencer[i][j]`` is the
    ``i``-th Tjurina coordinate of ``dF/dt_j`` at ``t = 0``.
    """

    tjurina: TjurinaData
    parameters: tuple
    directions: tuple
    family: Polynomial
    kodaira_spencer: tuple

    @property
    def f(self):
        return self.tjurina.f

    def is_miniversal(self):
        """Kodaira–Spencer matrix square and invertible."""
        m = self.tjurina.tjurina_number
        if len(self.parameters) != m:
            return False
        return linalg.rank(self.kodaira_spencer, self.f.field) == m if m else True

    def base_change(self, matrix):
        """Reparametrize by ``t_i -> sum_j matrix[i][j] t_j``.

        The new directions are ``g'_j = sum_i matrix[i][j] g_i`` and the
        Kodaira–Spencer matrix is recomputed from the new family.
        """
        m = len(self.parameters)
        field = self.f.field
        matrix = [[field(c) for c in row] for row in matrix]
        if len(matrix) != m or any(len(r) != m for r in matrix):
            raise ParameterError(f"base change must be a {m}x{m} matrix")
        zero = Polynomial.zero(self.f.variables, field)
        directions = []
        for j in range(m):
            g = zero
            for i in range(m):
                if matrix[i][j] != 0:
                    g = g + self.directions[i].scale(matrix[i][j])
            directions.append(g)
        return _assemble(self.tjurina, self.parameters, directions)

    def specialize_at_zero(self):
        """``F`` with every parameter set to 0."""
        x = self.f.variables
        n = len(x)
        terms = {m[:n]: c for m, c in self.family.terms() if not any(m[n:])}
        return Polynomial(terms, x, self.f.field)

    def to_dict(self):
        return {
            "family": str(self.family),
            "parameters": list(self.parameters),
            "directions": [str(g) for g in self.directions],
            "tjurina_basis": self.tjurina.basis_labels(),
            "kodaira_spencer": [[self.f.field.format(c) for c in row] for row in self.kodaira_spencer],
        }


def _assemble(td, parameters, directions):
    f = td.f
    allvars = f.variables + tuple(parameters)
    family = f.embed(allvars)
    for t, g in zip(parameters, directions):
        family = family + g.embed(allvars) * Polynomial.variable(t, allvars, f.field)
    n = f.nvars
    columns = []
    for j in range(len(parameters)):
        d = family.derivative(n + j)
        at_zero = Polynomial(
            {m[:n]: c for m, c in d.terms() if not any(m[n:])}, f.variables, f.field
        )
        columns.append(ks_class(td, at_zero))
    ks = tuple(tuple(col[i] for col in columns) for i in range(td.tjurina_number))
    return MiniversalFamily(td, tuple(parameters), tuple(directions), family, ks)


def miniversal_family(td, parameter_prefix="t"):
    """``f + sum t_i * b_i`` where ``b_i`` runs over the Tjurina monomial basis.

    The Kodaira–Spencer matrix of the result is the identity.
    """
    params = _fresh_names(parameter_prefix, td.tjurina_number, set(td.f.variables))
    mf = _assemble(td, params, td.basis_polynomials())
    m = td.tjurina_number
    ident = tuple(
        tuple(td.f.field.one if i == j else td.f.field.zero for j in range(m)) for i in range(m)
    )
    if mf.kodaira_spencer != ident:
        raise AssertionError("Kodaira–Spencer matrix of the monomial family is not the identity")
    return mf


# ---------------------------------------------------------------------------
# deformations over artinian bases


class DeformationOverA:
    """Equation ``F = sum_i e_i * coefficients[i]`` with ``e_i`` the basis of ``base``.

    ``coefficients[0]`` (the unit component) is the central fiber.
    """

    def __init__(self, base, coefficients):
        coefficients = tuple(coefficients)
        if len(coefficients) != base.dimension:
            raise ValueError(f"need {base.dimension} coefficient polynomials, got {len(coefficients)}")
        check_polynomials(coefficients, allow_empty=False)
        self.base = base
        self.coefficients = coefficients

    @property
    def central_fiber(self):
        return self.coefficients[0]

    @property
    def variables(self):
        return self.coefficients[0].variables

    @classmethod
    def trivial(cls, f, base):
        zero = Polynomial.zero(f.variables, f.field)
        return cls(base, [f] + [zero] * (base.dimension - 1))

    @classmethod
    def from_polynomial(cls, F, variables, base):
        """Split ``F`` in ``k[x, base variables]`` into coefficients over a presented ``base``."""
        if base.presentation is None:
            raise ValueError("base algebra has no polynomial presentation")
        bvars = base.presentation[0]
        variables = tuple(variables)
        allvars = variables + tuple(bvars)
        F = F if F.variables == allvars else F.embed(allvars)
        n = len(variables)
        field = F.field
        acc = [dict() for _ in range(base.dimension)]
        cache = {}
        for m, c in F.terms():
            tm = m[n:]
            if tm not in cache:
                cache[tm] = base.coordinates_of_polynomial(Polynomial.monomial(tm, bvars, field))
            for i, a in enumerate(cache[tm]):
                if a != 0:
                    acc[i][m[:n]] = acc[i].get(m[:n], field.zero) + c * a
        return cls(base, [Polynomial(d, variables, field) for d in acc])

    def as_polynomial(self):
        """``F`` in ``k[x, base variables]`` (needs a presented base)."""
        if self.base.presentation is None:
            raise ValueError("base algebra has no polynomial presentation")
        bvars, _, monomials = self.base.presentation
        allvars = self.variables + tuple(bvars)
        out = Polynomial.zero(allvars, self.coefficients[0].field)
        for mono, p in zip(monomials, self.coefficients):
            out = out + p.embed(allvars).mul_term((0,) * len(self.variables) + tuple(mono), 1)
        return out

    def pushforward(self, phi):
        """Image along ``phi: base -> B``."""
        if phi.source != self.base:
            raise MorphismError("morphism source is not the base of the deformation")
        zero = Polynomial.zero(self.variables, self.coefficients[0].field)
        out = []
        for row in phi.matrix:
            p = zero
            for c, q in zip(row, self.coefficients):
                if c != 0:
                    p = p + q.scale(c)
            out.append(p)
        return DeformationOverA(phi.target, out)

    def __eq__(self, other):
        if not isinstance(other, DeformationOverA):
            return NotImplemented
        return self.base == other.base and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def format(self):
        parts = []
        for label, p in zip(self.base.labels, self.coefficients):
            if p.is_zero():
                continue
            parts.append(str(p) if label == "1" else f"{label}*({p})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"DeformationOverA({self.format()!r}, base={self.base!r})"

    def to_dict(self):
        return {
            "base": self.base.to_dict(),
            "variables": list(self.variables),
            "coefficients": {label: str(p) for label, p in zip(self.base.labels, self.coefficients)},
        }

    @classmethod
    def from_dict(cls, data):
        base = FiniteKAlgebra.from_dict(data["base"])
        variables = data["variables"]
        field = field_from_string(data["base"].get("field", "Q"))
        coeffs = [parse_poly(data["coefficients"][label], variables, field) for label in base.labels]
        return cls(base, coeffs)


def specialize_family(mf, target, assignment):
    """Pull the miniversal family back along ``t_i -> assignment[i]`` in ``m_A``."""
    if len(assignment) != len(mf.parameters):
        raise AssignmentError(
            f"expected {len(mf.parameters)} parameter values, got {len(assignment)}"
        )
    values = [target.element(a) for a in assignment]
    for t, v in zip(mf.parameters, values):
        if not target.in_maximal_ideal(v):
            raise AssignmentError(f"value for {t} is not in the maximal ideal")
    x = mf.f.variables
    n = len(x)
    field = mf.f.field
    acc = [dict() for _ in range(target.dimension)]
    for m, c in mf.family.terms():
        elt = target.one()
        for v, e in zip(values, m[n:]):
            for _ in range(e):
                elt = target.mul(elt, v)
        for i, a in enumerate(elt):
            if a != 0:
                acc[i][m[:n]] = acc[i].get(m[:n], field.zero) + c * a
    d = DeformationOverA(target, [Polynomial(t, x, field) for t in acc])
    if d.central_fiber != mf.f:
        raise AssertionError("specialization changed the central fiber")
    return d


def lift_deformation(d, ext):
    """Lift ``d`` along a small extension ``ext: A' -> A``.

    Each coefficient is carried through a linear section of ``ext`` that
    sends a basis element of ``A`` to the same-labelled basis element of
    ``A'`` whenever possible.  Hypersurface deformations are unobstructed,
    so the result always pushes forward to ``d``.
    """
    if ext.target != d.base:
        raise MorphismError("extension target is not the base of the deformation")
    if not ext.is_small():
        raise NotSmallExtensionError("extension must be surjective with kernel killed by m")
    section = ext.section()
    zero = Polynomial.zero(d.variables, d.coefficients[0].field)
    coeffs = []
    for row in section:
        p = zero
        for c, q in zip(row, d.coefficients):
            if c != 0:
                p = p + q.scale(c)
        coeffs.append(p)
    lifted = DeformationOverA(ext.source, coeffs)
    if lifted.pushforward(ext) != d:
        raise AssertionError("lift does not push forward to the input")
    return lifted


@dataclass(frozen=True, eq=False)
class GluedDeformation:
    deformation: DeformationOverA
    product: object  # artin.FiberedProduct

    def __iter__(self):
        return iter((self.deformation, self.product))


def glue_deformations(d1, d2, p, q):
    """Deformation over ``A' x_A A''`` restricting to ``d1`` and ``d2``.

    Requires ``p_* d1 == q_* d2`` and ``q`` surjective.
    """
    if p.source != d1.base or q.source != d2.base:
        raise MorphismError("maps must start at the bases of the deformations")
    if d1.variables != d2.variables:
        raise IncompatibleDeformationsError("deformations live in different polynomial rings")
    if d1.pushforward(p) != d2.pushforward(q):
        raise IncompatibleDeformationsError("pushforwards to the common base differ")
    fp = fibered_product(p, q)
    b = fp.algebra
    field = b.field
    monos = set()
    for c in d1.coefficients + d2.coefficients:
        monos.update(c.monomials())
    acc = [dict() for _ in range(b.dimension)]
    for m in sorted(monos):
        u1 = [c.coefficient(m) for c in d1.coefficients]
        u2 = [c.coefficient(m) for c in d2.coefficients]
        coords = fp.coordinates(u1, u2)
        if coords is None:
            raise IncompatibleDeformationsError("coefficient pair does not lie in the fibered product")
        for i, a in enumerate(coords):
            if a != 0:
                acc[i][m] = a
    glued = DeformationOverA(b, [Polynomial(t, d1.variables, field) for t in acc])
    if glued.pushforward(fp.first) != d1 or glued.pushforward(fp.second) != d2:
        raise AssertionError("glued deformation does not restrict to its inputs")
    return GluedDeformation(glued, fp)


# ---------------------------------------------------------------------------
# minimal number of generators


def _mu_at(generators, n_vars, N):
    """``dim (I + m^N) / (m I + m^N)`` via sparse elimination."""
    from itertools import combinations_with_replacement

    monos = []
    for deg in range(N):
        for combo in combinations_with_replacement(range(n_vars), deg):
            m = [0] * n_vars
            for i in combo:
                m[i] += 1
            monos.append(tuple(m))
    key = lambda m: (sum(m), m)  # noqa: E731 - pivot on the lowest-degree column
    small = SparseEchelon(key)
    for g in generators:
        for m in monos:
            if sum(m) == 0:
                continue
            row = {}
            for gm, c in g.terms():
                tm = tuple(a + b for a, b in zip(gm, m))
                if sum(tm) < N:
                    row[tm] = c
            small.add(row)
    rank_small = len(small)
    for g in generators:
        small.add({gm: c for gm, c in g.terms() if sum(gm) < N})
    return len(small) - rank_small


def mu_generators(generators, variables=None, cap=64):
    """Minimal number of generators of ``I`` in the power series ring.

    Computes ``dim_k I/m I`` in truncations ``k[x]/m^N``; ``N`` starts at the
    largest generator degree plus two and doubles until the value is the
    same for three consecutive truncations.  Raises
    :class:`StabilizationError` if ``N`` would exceed ``cap``.
    """
    generators = [g for g in check_polynomials(generators)]
    if not generators:
        return 0
    if variables is not None and tuple(variables) != generators[0].variables:
        generators = [g.embed(variables) for g in generators]
    for g in generators:
        if g.constant_term() != 0:
            raise ParameterError(f"generator {g} has a nonzero constant term")
    generators = [g for g in generators if not g.is_zero()]
    if not generators:
        return 0
    n_vars = generators[0].nvars
    N = max(g.total_degree() for g in generators) + 2
    readings = []
    while N <= cap:
        readings.append(_mu_at(generators, n_vars, N))
        if len(readings) >= 3 and readings[-1] == readings[-2] == readings[-3]:
            return readings[-1]
        N *= 2
    raise StabilizationError(
        f"mu did not stabilize up to truncation degree {cap}; readings {readings}"
    )


# ---------------------------------------------------------------------------
# estimator interface


class TjurinaAlgebra(TransformerMixin, BaseEstimator):
    """Estimator form of the Tjurina algebra.

    ``fit(f)`` computes the Gröbner basis of ``(f, df)``; ``transform(gs)``
    returns Kodaira–Spencer coordinates of ``f + eps*g`` for each ``g``;
    ``inverse_transform`` turns coordinates back into representatives.

    Parameters
    ----------
    order : {"degrevlex", "lex"}, default "degrevlex"
    parameter_prefix : str, default "t"
        Prefix for the parameters of ``miniversal_family_``.
    """

    def __init__(self, order="degrevlex", parameter_prefix="t"):
        self.order = order
        self.parameter_prefix = parameter_prefix

    def fit(self, X, y=None):
        self.data_ = tjurina(check_polynomial(X, "f"), self.order)
        self.tjurina_number_ = self.data_.tjurina_number
        self.basis_ = self.data_.basis
        self.miniversal_family_ = miniversal_family(self.data_, self.parameter_prefix)
        return self

    def transform(self, X):
        check_is_fitted(self, "data_")
        return [ks_class(self.data_, g) for g in check_polynomials(X)]

    def inverse_transform(self, X):
        check_is_fitted(self, "data_")
        basis = self.data_.basis_polynomials()
        f = self.data_.f
        out = []
        for coords in X:
            if len(coords) != len(basis):
                raise ValueError(f"expected {len(basis)} coordinates, got {len(coords)}")
            p = Polynomial.zero(f.variables, f.field)
            for c, b in zip(coords, basis):
                p = p + b.scale(c)
            out.append(p)
        return out
