"""Line-bundle cohomology on P^n and deformation diagnostics of smooth hypersurfaces.

``coh_dim`` has two independent routes: the closed form (binomial
coefficients plus Serre duality) and a Čech computation on the standard
affine cover.  The hypersurface diagnostics are assembled from these
dimensions and from explicit multiplication-by-coordinates matrices.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import linalg
from ._validation import check_choice, check_int
from .exceptions import ParameterError, TruncationOverflowError
from .field import QQ

CECH_MAX_TWIST = 24


@dataclass(frozen=True)
class CohomologyQuery:
    n: int
    d: int
    q: int

    def __post_init__(self):
        check_int(self.n, "n", minimum=1)
        check_int(self.d, "d")
        check_int(self.q, "q", minimum=0, maximum=self.n)


def h0_formula(n, d):
    return comb(n + d, n) if d >= 0 else 0


def _coh_formula(n, d, q):
    if q == 0:
        return h0_formula(n, d)
    if q == n:
        return h0_formula(n, -d - n - 1)
    return 0


# -- Čech route -------------------------------------------------------------
#
# The Čech complex of O(d) on the cover {x_i != 0} is graded by Laurent
# exponent vectors a in Z^{n+1} with sum(a) = d.  The monomial x^a is a
# section over U_sigma exactly when every negative exponent index lies in
# sigma, and the differential preserves a.  So the complex splits into
# finite blocks, one per a, and each block depends only on neg(a).


@lru_cache(maxsize=None)
def _block_cohomology(n, negative):
    """Cohomology dimensions of the Čech block for exponents with negative set ``negative``."""
    negative = frozenset(negative)
    idx = range(n + 1)
    chains = []
    for p in range(n + 1):
        chains.append(
            [s for s in itertools.combinations(idx, p + 1) if negative.issubset(s)]
        )
    ranks = []
    for p in range(n):
        src, dst = chains[p], chains[p + 1]
        pos = {s: i for i, s in enumerate(src)}
        rows = []
        for t in dst:
            row = [QQ.zero] * len(src)
            for k in range(len(t)):
                face = t[:k] + t[k + 1 :]
                if face in pos:
                    row[pos[face]] = QQ((-1) ** k)
            rows.append(row)
        ranks.append(linalg.rank(rows) if rows and src else 0)
    dims = []
    for p in range(n + 1):
        r_out = ranks[p] if p < n else 0
        r_in = ranks[p - 1] if p > 0 else 0
        dims.append(len(chains[p]) - r_out - r_in)
    return tuple(dims)


@lru_cache(maxsize=None)
def _cech_all(n, d):
    bound = abs(d) + n + 1
    totals = [0] * (n + 1)
    rng = range(-bound, bound + 1)
    for head in itertools.product(rng, repeat=n):
        last = d - sum(head)
        if -bound <= last <= bound:
            neg = tuple(i for i, e in enumerate(head + (last,)) if e < 0)
            block = _block_cohomology(n, neg)
            for q in range(n + 1):
                totals[q] += block[q]
    return tuple(totals)


def coh_dim(query_or_n, d=None, q=None, method="formula"):
    """``dim H^q(P^n, O(d))``.

    Accepts a :class:`CohomologyQuery` or ``(n, d, q)``.  ``method`` is
    ``"formula"`` or ``"cech"``; the latter truncates Laurent exponents to
    ``[-(|d|+n+1), |d|+n+1]`` and refuses ``|d| > CECH_MAX_TWIST``.
    """
    if isinstance(query_or_n, CohomologyQuery):
        query = query_or_n
    else:
        query = CohomologyQuery(query_or_n, d, q)
    check_choice(method, "method", {"formula", "cech"})
    if method == "formula":
        return _coh_formula(query.n, query.d, query.q)
    if abs(query.d) > CECH_MAX_TWIST:
        raise TruncationOverflowError(
            f"|d| = {abs(query.d)} exceeds the Čech truncation bound {CECH_MAX_TWIST}"
        )
    return _cech_all(query.n, query.d)[query.q]


def euler_characteristic(n, d):
    """``chi(P^n, O(d)) = (d+1)(d+2)...(d+n)/n!`` for every integer ``d``."""
    num = 1
    for i in range(1, n + 1):
        num *= d + i
    den = 1
    for i in range(1, n + 1):
        den *= i
    return num // den


# -- multiplication by the coordinates ---------------------------------------


def _monomials(nvars, degree):
    if degree < 0:
        return []
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class GradedMultiplicationMap:
    """``H^0(O(e))^(n+1) -> H^0(O(e+1))``, ``(s_0, ..., s_n) -> sum x_i s_i``.

    Columns are indexed by ``(i, monomial of degree e)``, rows by monomials of
    degree ``e+1``; entries are 0 or 1.
    """

    n: int
    e: int
    source: tuple
    target: tuple
    matrix: tuple

    @classmethod
    def build(cls, n, e):
        src_monos = _monomials(n + 1, e)
        source = tuple((i, m) for i in range(n + 1) for m in src_monos)
        target = tuple(_monomials(n + 1, e + 1))
        pos = {m: r for r, m in enumerate(target)}
        rows = [[0] * len(source) for _ in target]
        for c, (i, m) in enumerate(source):
            prod = m[:i] + (m[i] + 1,) + m[i + 1 :]
            rows[pos[prod]][c] = 1
        return cls(n, e, source, target, tuple(tuple(r) for r in rows))

    def rank(self):
        if not self.source or not self.target:
            return 0
        return linalg.rank([[QQ(x) for x in row] for row in self.matrix])

    def kernel_dim(self):
        return len(self.source) - self.rank()

    def cokernel_dim(self):
        return len(self.target) - self.rank()


def _check_delta_params(n, d):
    check_int(n, "n", minimum=2)
    check_int(d, "d", minimum=1)


def delta_closed_form(n, d):
    _check_delta_params(n, d)
    return (n == 2 and d <= 4) or (n == 3 and d != 4) or n >= 4


def cokernel_delta_dim(n, d):
    """``dim coker(delta) = dim H^2(P^n, T(-d))`` from the twisted Euler sequence.

    The relevant piece of the long exact sequence is
    ``H^2(O(-d)) -> H^2(O(1-d))^(n+1) -> H^2(T(-d)) -> H^3(O(-d)) -> H^3(O(1-d))^(n+1)``.
    Top-degree groups are handled through the Serre-dual multiplication map;
    groups in intermediate degree vanish.
    """
    _check_delta_params(n, d)
    # contribution of coker(H^2(O(-d)) -> H^2(O(1-d))^(n+1))
    if n == 2:
        # dual map H^0(O(d-4))^3 -> H^0(O(d-3)); coker phi = (ker phi^dual)^dual
        first = GradedMultiplicationMap.build(2, d - 4).kernel_dim()
    else:
        if coh_dim(n, 1 - d, 2):
            raise ParameterError("H^2(O(1-d)) does not vanish; cokernel undetermined")
        first = 0
    # contribution of ker(H^3(O(-d)) -> H^3(O(1-d))^(n+1))
    if n == 3:
        # dual map H^0(O(d-5))^4 -> H^0(O(d-4)); ker phi = (coker phi^dual)^dual
        second = GradedMultiplicationMap.build(3, d - 5).cokernel_dim()
    elif n == 2:
        second = 0
    else:
        if coh_dim(n, -d, 3):
            raise ParameterError("H^3(O(-d)) does not vanish; kernel undetermined")
        second = 0
    return first + second


def delta_surjective(n, d, method="closed_form"):
    """Whether ``H^0(N) -> H^1(T_Z)`` is onto for a smooth degree-``d`` hypersurface ``Z`` in ``P^n``."""
    check_choice(method, "method", {"closed_form", "linear_algebra"})
    if method == "closed_form":
        return delta_closed_form(n, d)
    return cokernel_delta_dim(n, d) == 0


# -- hypersurface report ------------------------------------------------------


CITATIONS = (
    "hilbert-tangent: H^0(Z, N) with N = O_Z(d)",
    "hilbert-obstruction: H^1(Z, N)",
    "delta-surjectivity: coker(delta) = H^2(P^n, T(-d))",
    "embedding: every abstract deformation embeds iff delta is onto",
)


@dataclass(frozen=True)
class HypersurfaceReport:
    n: int
    d: int
    hilb_tangent_dim: int
    hilb_obstruction_dim: int
    delta_surjective: bool
    all_deformations_embedded: bool

    def to_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "hilb_tangent_dim": self.hilb_tangent_dim,
            "hilb_obstruction_dim": self.hilb_obstruction_dim,
            "delta_surjective": self.delta_surjective,
            "all_deformations_embedded": self.all_deformations_embedded,
            "citations": list(CITATIONS),
        }


def _restricted_twist_cohomology(n, d):
    """``(h^0, h^1)`` of ``O_Z(d)`` from ``0 -> O -> O(d) -> O_Z(d) -> 0``.

    Multiplication by the equation is injective on ``H^0``; the remaining
    connecting maps only enter through groups that vanish for ``n >= 2``,
    which is checked rather than assumed.
    """
    h = lambda t, q: coh_dim(n, t, q)  # noqa: E731
    # 0 -> H0(O) -> H0(O(d)) -> H0(O_Z(d)) -> H1(O) -> H1(O(d)) -> H1(O_Z(d)) -> H2(O) -> H2(O(d))
    if h(0, 1) or h(d, 1) or h(0, 2):
        raise ParameterError("connecting maps are not determined by dimensions alone")
    h0 = h(d, 0) - h(0, 0)
    h1 = 0
    return h0, h1


def hypersurface_report(n, d):
    _check_delta_params(n, d)
    h0, h1 = _restricted_twist_cohomology(n, d)
    surj = delta_surjective(n, d, "linear_algebra")
    return HypersurfaceReport(n, d, h0, h1, surj, surj)


# -- curves -------------------------------------------------------------------


def riemann_roch_chi(degree, genus):
    """``chi(L) = deg L + 1 - g`` on a smooth projective curve of genus ``g``."""
    return degree + 1 - genus


def curve_moduli_dim(g):
    """``dim H^1(X, T_X)`` for a smooth projective curve of genus ``g``.

    ``T_X`` has degree ``2 - 2g``; ``h^0(T_X)`` is 3, 1, 0 for genus 0, 1, >= 2.
    """
    g = check_int(g, "genus", minimum=0)
    chi = riemann_roch_chi(2 - 2 * g, g)
    if g == 0:
        h0 = 3  # T = O(2) on P^1
    elif g == 1:
        h0 = 1  # T trivial
    else:
        h0 = 0  # negative degree
    return h0 - chi


@dataclass(frozen=True)
class ChiNormal:
    """``chi(N) = 4 chi(O_Z(1)) - chi(O_Z) - chi(T_Z)`` for a curve ``Z`` in ``P^3``."""

    total: int
    four_chi_o1: int
    chi_o: int
    chi_t: int

    def __int__(self):
        return self.total

    def __eq__(self, other):
        if isinstance(other, int):
            return self.total == other
        return super().__eq__(other)

    __hash__ = object.__hash__

    def to_dict(self):
        return {
            "chi_normal": self.total,
            "four_chi_O_Z_1": self.four_chi_o1,
            "chi_O_Z": self.chi_o,
            "chi_T_Z": self.chi_t,
        }


def chi_normal_p3(d, g):
    """Euler characteristic of the normal sheaf of a smooth degree-``d`` genus-``g`` curve in ``P^3``."""
    d = check_int(d, "d", minimum=1)
    g = check_int(g, "genus", minimum=0)
    four = 4 * riemann_roch_chi(d, g)
    chi_o = riemann_roch_chi(0, g)
    chi_t = riemann_roch_chi(2 - 2 * g, g)
    return ChiNormal(four - chi_o - chi_t, four, chi_o, chi_t)
