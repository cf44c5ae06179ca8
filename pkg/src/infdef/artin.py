"""Finite-dimensional local k-algebras with residue field k.

An algebra is stored by structure constants on a basis ``e_0, ..., e_{n-1}``
with ``e_0 = 1`` and ``e_1, ..., e_{n-1}`` spanning the maximal ideal (the
*canonical presentation*).  Elements are coordinate lists.  Morphisms are
matrices with one column per source basis element.
"""

from dataclasses import dataclass, field as dc_field

from . import linalg
from .exceptions import (
    AlgebraStructureError,
    MorphismError,
    NotArtinianError,
    NotSmallExtensionError,
    NotSurjectiveError,
    NotZeroDimensionalError,
    ResidueFieldError,
)
from .field import QQ
from .groebner import buchberger, normal_form, quotient_basis
from .poly import DEGREVLEX, Polynomial, format_monomial


class FiniteKAlgebra:
    """Commutative local k-algebra of finite dimension.

    Parameters
    ----------
    labels : sequence of str
        Basis names; ``labels[0]`` names the unit.
    table : nested sequence
        ``table[i][j]`` is the coordinate vector of ``e_i * e_j``.
    field : field object, default QQ
    presentation : (variables, GroebnerBasis, monomials) or None
        Set when the algebra is a monomial-basis quotient ``k[x]/I``.
    check : bool, default True
        Verify commutativity, associativity, the unit and nilpotency of
        the maximal ideal.
    """

    def __init__(self, labels, table, field=QQ, presentation=None, check=True):
        self.labels = tuple(labels)
        self.field = field
        n = len(self.labels)
        if n == 0:
            raise AlgebraStructureError("an algebra needs at least the unit basis element")
        self.table = tuple(
            tuple(tuple(field(c) for c in table[i][j]) for j in range(n)) for i in range(n)
        )
        self.presentation = presentation
        if check:
            self._check_axioms()
        self.order = self._compute_order()

    # basic data -----------------------------------------------------------

    @property
    def dimension(self):
        return len(self.labels)

    def __len__(self):
        return self.dimension

    @classmethod
    def ground(cls, field=QQ):
        """The residue field ``k`` itself."""
        return cls(["1"], [[[1]]], field)

    def zero(self):
        return [self.field.zero] * self.dimension

    def one(self):
        return self.basis_vector(0)

    def basis_vector(self, i):
        v = self.zero()
        v[i] = self.field.one
        return v

    def element(self, coords):
        if len(coords) != self.dimension:
            raise ValueError(f"expected {self.dimension} coordinates, got {len(coords)}")
        return [self.field(c) for c in coords]

    def add(self, u, v):
        return [a + b for a, b in zip(u, v)]

    def scale(self, c, u):
        return [c * a for a in u]

    def mul(self, u, v):
        out = self.zero()
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c != 0:
                        out[k] = out[k] + ab * c
        return out

    def power(self, u, k):
        result = self.one()
        for _ in range(k):
            result = self.mul(result, u)
        return result

    def in_maximal_ideal(self, u):
        return u[0] == 0

    def format_element(self, u):
        parts = []
        for c, label in zip(u, self.labels):
            if c == 0:
                continue
            parts.append(f"{c}" if label == "1" else (label if c == 1 else f"{c}*{label}"))
        return " + ".join(parts) if parts else "0"

    # axioms ---------------------------------------------------------------

    def _check_axioms(self):
        n = self.dimension
        t = self.table
        for row in t:
            for v in row:
                if len(v) != n:
                    raise AlgebraStructureError("structure constant vectors have the wrong length")
        e = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            if list(t[0][i]) != e[i] or list(t[i][0]) != e[i]:
                raise AlgebraStructureError(f"e_0 is not a unit (fails on e_{i})")
            for j in range(i + 1, n):
                if t[i][j] != t[j][i]:
                    raise AlgebraStructureError(f"not commutative on (e_{i}, e_{j})")
        for i in range(n):
            for j in range(n):
                eij = list(t[i][j])
                for k in range(n):
                    if self.mul(eij, e[k]) != self.mul(e[i], list(t[j][k])):
                        raise AlgebraStructureError(f"not associative on (e_{i}, e_{j}, e_{k})")
        for i in range(1, n):
            for j in range(1, n):
                if t[i][j][0] != 0:
                    raise AlgebraStructureError(
                        "e_1, ..., e_{n-1} do not span an ideal (unit coordinate in a product)"
                    )

    def maximal_ideal_powers(self):
        """Echelon bases of ``m, m^2, ...`` down to (excluding) zero."""
        n = self.dimension
        current = [self.basis_vector(i) for i in range(1, n)]
        powers = []
        while current:
            red, _ = linalg.rref(current, self.field)
            if not red:
                break
            powers.append(red)
            if len(powers) > n:
                raise AlgebraStructureError("maximal ideal is not nilpotent")
            current = [self.mul(u, self.basis_vector(i)) for u in red for i in range(1, n)]
        return powers

    def _compute_order(self):
        return len(self.maximal_ideal_powers())

    # ideals ---------------------------------------------------------------

    def ideal_product_with_m(self, basis):
        """Echelon basis of ``m * J`` for the subspace spanned by ``basis``."""
        prods = [self.mul(self.basis_vector(i), u) for u in basis for i in range(1, self.dimension)]
        return linalg.rref(prods, self.field)[0] if prods else []

    # comparison / serialization -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteKAlgebra):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.labels, self.table))

    def __repr__(self):
        return f"FiniteKAlgebra(dim={self.dimension}, order={self.order}, basis={list(self.labels)})"

    def to_dict(self):
        fmt = self.field.format
        return {
            "field": self.field.name,
            "dimension": self.dimension,
            "basis": list(self.labels),
            "structure_constants": [
                [[fmt(c) for c in v] for v in row] for row in self.table
            ],
            "order": self.order,
        }

    @classmethod
    def from_dict(cls, data):
        from .field import field_from_string

        field = field_from_string(data.get("field", "Q"))
        alg = cls(data["basis"], data["structure_constants"], field)
        if "dimension" in data and data["dimension"] != alg.dimension:
            raise AlgebraStructureError("dimension field disagrees with the basis length")
        if "order" in data and data["order"] != alg.order:
            raise AlgebraStructureError("order field disagrees with the structure constants")
        return alg

    # presentation helpers -------------------------------------------------

    def coordinates_of_polynomial(self, p):
        """Coordinates of the class of ``p`` (needs a quotient presentation)."""
        if self.presentation is None:
            raise AlgebraStructureError("algebra has no polynomial presentation")
        variables, gb, monomials = self.presentation
        p = p if p.variables == variables else p.embed(variables)
        nf = normal_form(p, gb)
        index = {m: i for i, m in enumerate(monomials)}
        out = self.zero()
        for m, c in nf.terms():
            out[index[m]] = c
        return out


def algebra_from_quotient(variables, generators, field=QQ, order=DEGREVLEX):
    """Present ``k[variables]/(generators)`` by structure constants.

    The ideal must contain a power of the maximal ideal at the origin, so
    the quotient is local artinian with residue field k.  Basis: standard
    monomials of the reduced Gröbner basis, ascending (``1`` first).
    """
    variables = tuple(variables)
    gens = [g if isinstance(g, Polynomial) else None for g in generators]
    if any(g is None for g in gens):
        raise TypeError("generators must be Polynomials")
    if not variables:
        return FiniteKAlgebra.ground(field)
    if not gens:
        raise NotArtinianError("the zero ideal gives an infinite-dimensional quotient")
    gb = buchberger(gens, order)
    if gb.is_unit_ideal():
        raise ResidueFieldError("the ideal is the unit ideal; the quotient is zero")
    try:
        basis = quotient_basis(gb)
    except NotZeroDimensionalError as exc:
        raise NotArtinianError(str(exc)) from exc
    zero = (0,) * len(variables)
    if basis[0] != zero:
        raise ResidueFieldError("1 is not a standard monomial")
    # locality: every variable nilpotent in the quotient
    n = len(basis)
    for name in variables:
        x = Polynomial.variable(name, variables, field)
        if not normal_form(x ** n, gb).is_zero():
            raise ResidueFieldError(
                f"{name} is not nilpotent modulo the ideal; the quotient is not local at the origin"
            )
    index = {m: i for i, m in enumerate(basis)}
    table = []
    for a in basis:
        row = []
        for b in basis:
            prod = normal_form(Polynomial.monomial(tuple(x + y for x, y in zip(a, b)), variables, field), gb)
            v = [field.zero] * n
            for m, c in prod.terms():
                v[index[m]] = c
            row.append(v)
        table.append(row)
    labels = [format_monomial(m, variables) for m in basis]
    return FiniteKAlgebra(labels, table, field, presentation=(variables, gb, tuple(basis)))


def dual_numbers(name="e", field=QQ):
    """``k[name]/(name^2)``."""
    return algebra_from_quotient([name], [Polynomial.monomial((2,), [name], field)], field)


def truncated_polynomial_algebra(name, n, field=QQ):
    """``k[name]/(name^n)``."""
    return algebra_from_quotient([name], [Polynomial.monomial((n,), [name], field)], field)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    """Unital multiplicative k-linear map; ``matrix[i][j]`` = coordinate ``i`` of the image of ``e_j``."""

    source: FiniteKAlgebra
    target: FiniteKAlgebra
    matrix: tuple
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        f = self.target.field
        m = tuple(tuple(f(c) for c in row) for row in self.matrix)
        if len(m) != self.target.dimension or any(len(r) != self.source.dimension for r in m):
            raise MorphismError(
                f"matrix shape must be {self.target.dimension} x {self.source.dimension}"
            )
        object.__setattr__(self, "matrix", m)
        if self.check:
            self._check()

    def _check(self):
        if self.column(0) != self.target.one():
            raise MorphismError("morphism is not unital")
        for j in range(1, self.source.dimension):
            if self.matrix[0][j] != 0:
                raise MorphismError("morphism does not map the maximal ideal into the maximal ideal")
        n = self.source.dimension
        for i in range(n):
            for j in range(i, n):
                lhs = self(list(self.source.table[i][j]))
                rhs = self.target.mul(self.column(i), self.column(j))
                if lhs != rhs:
                    raise MorphismError(f"morphism is not multiplicative on (e_{i}, e_{j})")

    def column(self, j):
        return [row[j] for row in self.matrix]

    def __call__(self, u):
        return linalg.matvec(self.matrix, u, self.target.field)

    def then(self, other):
        """The composite ``other ∘ self``."""
        if other.source != self.target:
            raise MorphismError("morphisms are not composable")
        return AlgebraMorphism(
            self.source,
            other.target,
            linalg.matmul(other.matrix, self.matrix, self.target.field),
            check=False,
        )

    def __eq__(self, other):
        if not isinstance(other, AlgebraMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def rank(self):
        return linalg.rank(self.matrix, self.target.field)

    def is_surjective(self):
        return self.rank() == self.target.dimension

    def kernel(self):
        """Echelon basis of the kernel (a subspace of the source)."""
        null = linalg.nullspace(self.matrix, self.source.dimension, self.target.field)
        return linalg.rref(null, self.target.field)[0] if null else []

    def is_small(self):
        """Surjective with kernel annihilated by the source's maximal ideal."""
        return self.is_surjective() and not self.source.ideal_product_with_m(self.kernel())

    def is_tiny(self):
        return self.is_small() and len(self.kernel()) == 1

    def section(self):
        """A k-linear right inverse (as a matrix), preferring same-label basis elements.

        Each target basis element is sent to the source basis element with the
        same label when that is a preimage; otherwise to the echelon preimage.
        """
        if not self.is_surjective():
            raise NotSurjectiveError("only surjections have sections")
        f = self.target.field
        src_index = {label: i for i, label in enumerate(self.source.labels)}
        cols = []
        for j, label in enumerate(self.target.labels):
            ej = self.target.basis_vector(j)
            i = src_index.get(label)
            if i is not None and self.column(i) == ej:
                col = self.source.basis_vector(i)
            else:
                col = linalg.solve(self.matrix, ej, f)
            cols.append(col)
        return linalg.transpose(cols, self.source.dimension)

    def to_dict(self):
        fmt = self.target.field.format
        return {
            "source_dimension": self.source.dimension,
            "target_dimension": self.target.dimension,
            "matrix": [[fmt(c) for c in row] for row in self.matrix],
        }


def identity_morphism(algebra):
    return AlgebraMorphism(algebra, algebra, linalg.identity(algebra.dimension, algebra.field), check=False)


def residue_map(algebra):
    """The projection ``A -> k``."""
    k = FiniteKAlgebra.ground(algebra.field)
    row = [algebra.field.one] + [algebra.field.zero] * (algebra.dimension - 1)
    return AlgebraMorphism(algebra, k, [row])


def morphism_from_images(source, target, images):
    """Morphism out of a presented algebra ``k[x]/I`` sending ``x_i`` to ``images[i]``.

    Images must lie in the target's maximal ideal; well-definedness is
    checked through multiplicativity on all basis pairs.
    """
    if source.presentation is None:
        if source.dimension == 1:
            return AlgebraMorphism(source, target, [[c] for c in target.one()])
        raise AlgebraStructureError("source algebra has no polynomial presentation")
    variables, _, monomials = source.presentation
    if len(images) != len(variables):
        raise MorphismError(f"expected {len(variables)} images, got {len(images)}")
    images = [target.element(v) for v in images]
    for v in images:
        if not target.in_maximal_ideal(v):
            raise MorphismError("generator images must lie in the maximal ideal")
    cols = []
    for m in monomials:
        col = target.one()
        for img, e in zip(images, m):
            for _ in range(e):
                col = target.mul(col, img)
        cols.append(col)
    return AlgebraMorphism(source, target, linalg.transpose(cols, target.dimension))


def quotient_by_ideal(algebra, ideal_basis):
    """``A/J`` for an ideal ``J`` inside the maximal ideal, with its projection.

    The quotient keeps the basis elements of ``A`` that are not pivots of
    the echelon basis of ``J``; labels and any monomial presentation carry over.
    """
    f = algebra.field
    red, pivots = linalg.rref(ideal_basis, f) if ideal_basis else ([], [])
    if 0 in pivots:
        raise AlgebraStructureError("the ideal is not contained in the maximal ideal")
    keep = [i for i in range(algebra.dimension) if i not in set(pivots)]

    def reduce(v):
        v = list(v)
        for row, pc in zip(red, pivots):
            c = v[pc]
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        return [v[i] for i in keep]

    table = [[reduce(algebra.table[i][j]) for j in keep] for i in keep]
    quotient = FiniteKAlgebra([algebra.labels[i] for i in keep], table, f, check=False)
    proj = linalg.transpose([reduce(algebra.basis_vector(i)) for i in range(algebra.dimension)], len(keep))
    return quotient, AlgebraMorphism(algebra, quotient, proj, check=False)


# ---------------------------------------------------------------------------
# fibered products


@dataclass(frozen=True, eq=False)
class FiberedProduct:
    """``B = A' x_A A''`` with its projections and its inclusion into ``A' ⊕ A''``."""

    algebra: FiniteKAlgebra
    first: AlgebraMorphism
    second: AlgebraMorphism
    inclusion: tuple  # rows of (dim A' + dim A'') x dim B
    p: AlgebraMorphism
    q: AlgebraMorphism

    def __iter__(self):
        return iter((self.algebra, self.first, self.second))

    def coordinates(self, u1, u2):
        """Coordinates in ``B`` of the pair ``(u1, u2)``, or ``None`` if not in ``B``."""
        return linalg.solve(self.inclusion, list(u1) + list(u2), self.algebra.field)

    def universal_morphism(self, u, v):
        """The unique ``C -> B`` through which ``u: C -> A'`` and ``v: C -> A''`` factor."""
        if u.source != v.source:
            raise MorphismError("u and v must share a source")
        if u.then(self.p).matrix != v.then(self.q).matrix:
            raise MorphismError("p ∘ u and q ∘ v differ")
        cols = [self.coordinates(u.column(j), v.column(j)) for j in range(u.source.dimension)]
        return AlgebraMorphism(u.source, self.algebra, linalg.transpose(cols, self.algebra.dimension))


def _pair_label(u1, u2, a1, a2):
    def show(alg, u):
        return alg.format_element(u).replace(" ", "")

    return f"({show(a1, u1)},{show(a2, u2)})"


def fibered_product(p, q):
    """Fibered product of ``p: A' -> A`` and a surjection ``q: A'' -> A``.

    ``B`` is the kernel of ``p - q`` on ``A' ⊕ A''``.  Its basis is the unit
    ``(1, 1)`` followed by the reduced-row-echelon basis of the kernel inside
    ``m' ⊕ m''``.
    """
    if p.target != q.target:
        raise MorphismError("p and q must have the same target")
    if not q.is_surjective():
        raise NotSurjectiveError("the second map of a fibered product must be surjective")
    a1, a2, a = p.source, q.source, p.target
    f = a.field
    n1, n2 = a1.dimension, a2.dimension
    # columns: m' coordinates (1..n1-1) then m'' coordinates (1..n2-1)
    diff = []
    for i in range(a.dimension):
        diff.append([p.matrix[i][j] for j in range(1, n1)] + [-q.matrix[i][j] for j in range(1, n2)])
    ker = linalg.nullspace(diff, n1 + n2 - 2, f)
    ker = linalg.rref(ker, f)[0] if ker else []
    unit = a1.one() + a2.one()
    vectors = [unit]
    for w in ker:
        vectors.append([f.zero] + w[: n1 - 1] + [f.zero] + w[n1 - 1 :])
    inclusion = linalg.transpose(vectors, n1 + n2)

    def coords(v):
        return linalg.solve(inclusion, v, f)

    table = []
    for u in vectors:
        row = []
        for w in vectors:
            prod = a1.mul(u[:n1], w[:n1]) + a2.mul(u[n1:], w[n1:])
            row.append(coords(prod))
        table.append(row)
    labels = ["1"] + [_pair_label(v[:n1], v[n1:], a1, a2) for v in vectors[1:]]
    b = FiniteKAlgebra(labels, table, f)
    first = AlgebraMorphism(b, a1, [row for row in inclusion[:n1]])
    second = AlgebraMorphism(b, a2, [row for row in inclusion[n1:]])
    return FiberedProduct(b, first, second, tuple(tuple(r) for r in inclusion), p, q)


# ---------------------------------------------------------------------------
# factorization into tiny extensions


@dataclass(frozen=True, eq=False)
class SmallExtensionChain:
    """Composable tiny extensions ``A' = A_r -> ... -> A_0 = A``."""

    source: FiniteKAlgebra
    target: FiniteKAlgebra
    steps: tuple

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def composite(self):
        if not self.steps:
            return identity_morphism(self.source)
        out = self.steps[0]
        for s in self.steps[1:]:
            out = out.then(s)
        return out

    @property
    def algebras(self):
        return [self.source] + [s.target for s in self.steps]


def factor_small_extension(phi):
    """Factor a surjection into tiny extensions.

    The kernel ``K`` is filtered by ``K ⊇ mK ⊇ m^2 K ⊇ ...``; each graded
    piece is peeled one basis line at a time, in echelon order.  The chain
    has ``dim K`` steps, each with one-dimensional kernel killed by ``m``.
    """
    if not phi.is_surjective():
        raise NotSurjectiveError("only surjections factor into small extensions")
    src = phi.source
    f = src.field
    kernel = phi.kernel()
    # descending chain of ideals J_0 = K ⊋ J_1 ⊋ ... ⊋ J_r = 0
    layers = []
    current = kernel
    while current:
        nxt = src.ideal_product_with_m(current)
        layers.append((current, nxt))
        current = nxt
    chain = []
    for big, small in layers:
        complement = []
        span = [list(v) for v in small]
        r = linalg.rank(span, f) if span else 0
        for v in big:
            if linalg.rank(span + [v], f) > r:
                span.append(v)
                complement.append(v)
                r += 1
        for k in range(len(complement)):
            chain.append([list(v) for v in small] + complement[k:])
    chain.append([])  # J_r = 0
    # chain[0] = K; build quotients A'/J_i for 1 <= i < r
    r = len(chain) - 1
    if r == 0:
        return SmallExtensionChain(src, phi.target, ())
    quotients = {}
    for i in range(1, r):
        quotients[i] = quotient_by_ideal(src, chain[i])
    steps = []
    prev_alg = src
    prev_proj = identity_morphism(src)  # src -> prev_alg
    for i in range(r - 1, 0, -1):
        q_alg, q_proj = quotients[i]
        section = prev_proj.section()
        mat = linalg.matmul(q_proj.matrix, section, f)
        steps.append(AlgebraMorphism(prev_alg, q_alg, mat))
        prev_alg, prev_proj = q_alg, q_proj
    section = prev_proj.section()
    steps.append(AlgebraMorphism(prev_alg, phi.target, linalg.matmul(phi.matrix, section, f)))
    for s in steps:
        if not s.is_tiny():
            raise NotSmallExtensionError("internal error: a factor is not a tiny extension")
    return SmallExtensionChain(src, phi.target, tuple(steps))
