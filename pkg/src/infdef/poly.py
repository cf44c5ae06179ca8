"""Sparse multivariate polynomials with exact coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
field elements, tagged with its ordered variable names and field.  The
declared variable order is also the variable precedence of every monomial
order used on it.
"""

import re
from fractions import Fraction

from .exceptions import FieldError, ParseError, RingMismatchError, UnknownVariableError
from .field import QQ, GFElement


class MonomialOrder:
    """A monomial order on exponent tuples: ``degrevlex`` or ``lex``.

    ``key(m)`` returns a sort key that grows with the monomial.
    """

    KINDS = ("degrevlex", "lex")

    def __init__(self, kind="degrevlex"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}; expected one of {self.KINDS}")
        self.kind = kind

    def key(self, m):
        if self.kind == "lex":
            return m
        return (sum(m), tuple(-e for e in reversed(m)))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(("order", self.kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def as_order(order):
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))


def format_monomial(m, variables):
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial.

    Parameters
    ----------
    terms : mapping
        Exponent tuple -> coefficient.  Coefficients are coerced into
        ``field`` and zeros are dropped.
    variables : sequence of str
        Ordered variable names.
    field : field object, default QQ
    """

    __slots__ = ("variables", "field", "_terms", "_hash")

    def __init__(self, terms, variables, field=QQ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"variable names must be distinct: {variables}")
        n = len(variables)
        clean = {}
        for m, c in dict(terms).items():
            m = tuple(m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for variables {variables}")
            c = field(c)
            if c != 0:
                clean[m] = c
        self.variables = variables
        self.field = field
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, variables, field):
        # terms already canonical: tuple keys, nonzero field elements
        p = cls.__new__(cls)
        p.variables = variables
        p.field = field
        p._terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, variables, field=QQ):
        return cls({}, variables, field)

    @classmethod
    def constant(cls, c, variables, field=QQ):
        return cls({(0,) * len(tuple(variables)): c}, variables, field)

    @classmethod
    def monomial(cls, m, variables, field=QQ, coefficient=1):
        return cls({tuple(m): coefficient}, variables, field)

    @classmethod
    def variable(cls, name, variables, field=QQ):
        variables = tuple(variables)
        m = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise UnknownVariableError(f"unknown variable {name!r}")
        return cls({m: 1}, variables, field)

    # inspection -----------------------------------------------------------

    @property
    def nvars(self):
        return len(self.variables)

    def terms(self):
        """``(exponents, coefficient)`` pairs, in no particular order."""
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m):
        return self._terms.get(tuple(m), self.field.zero)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        zero = (0,) * self.nvars
        return all(m == zero for m in self._terms)

    def total_degree(self):
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def leading_monomial(self, order=DEGREVLEX):
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self._terms, key=as_order(order).key)

    def leading_coefficient(self, order=DEGREVLEX):
        return self._terms[self.leading_monomial(order)]

    def sorted_terms(self, order=DEGREVLEX, descending=True):
        key = as_order(order).key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=descending)

    # ring structure -------------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables:
            raise RingMismatchError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )
        if self.field != other.field:
            raise RingMismatchError(f"fields differ: {self.field!r} vs {other.field!r}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, GFElement)):
            return Polynomial.constant(other, self.variables, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial._raw(out, self.variables, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.variables, self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GFElement)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                out[m] = s
        out = {m: c for m, c in out.items() if c != 0}
        return Polynomial._raw(out, self.variables, self.field)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GFElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.variables, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = self.field(c)
        if c == 0:
            return Polynomial.zero(self.variables, self.field)
        return Polynomial._raw({m: c * v for m, v in self._terms.items()}, self.variables, self.field)

    def mul_term(self, m, c):
        """Multiply by the single term ``c * x^m``."""
        if c == 0:
            return Polynomial.zero(self.variables, self.field)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(k, m)): c * v for k, v in self._terms.items()},
            self.variables,
            self.field,
        )

    def monic(self, order=DEGREVLEX):
        return self.scale(self.field.one / self.leading_coefficient(order))

    def derivative(self, i):
        """Formal partial derivative with respect to the ``i``-th variable."""
        if isinstance(i, str):
            i = self.variables.index(i)
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e == 0:
                continue
            c2 = c * e
            if c2 == 0:
                continue
            out[m[:i] + (e - 1,) + m[i + 1 :]] = c2
        return Polynomial._raw(out, self.variables, self.field)

    def truncate(self, degree):
        """Drop every term of total degree ``>= degree``."""
        return Polynomial._raw(
            {m: c for m, c in self._terms.items() if sum(m) < degree}, self.variables, self.field
        )

    # change of ring -------------------------------------------------------

    def embed(self, variables):
        """Re-express over a larger variable list containing ours."""
        variables = tuple(variables)
        try:
            idx = [variables.index(v) for v in self.variables]
        except ValueError as exc:
            raise RingMismatchError(f"{self.variables} not contained in {variables}") from exc
        out = {}
        for m, c in self._terms.items():
            new = [0] * len(variables)
            for j, e in zip(idx, m):
                new[j] = e
            out[tuple(new)] = c
        return Polynomial._raw(out, variables, self.field)

    def restrict(self, variables):
        """Re-express over a sub-list of variables; fails if a dropped one occurs."""
        variables = tuple(variables)
        idx = [self.variables.index(v) for v in variables]
        keep = set(idx)
        out = {}
        for m, c in self._terms.items():
            if any(e and j not in keep for j, e in enumerate(m)):
                raise RingMismatchError(f"{self} involves variables outside {variables}")
            out[tuple(m[j] for j in idx)] = c
        return Polynomial._raw(out, variables, self.field)

    # comparison / output --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.variables == other.variables
                and self.field == other.field
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction, GFElement)):
            return self == Polynomial.constant(other, self.variables, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def format(self, order=DEGREVLEX):
        """Canonical text: terms in descending ``order``."""
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            if isinstance(c, GFElement):
                neg, mag = False, self.field.format(c)
            else:
                neg, mag = c < 0, str(abs(c))
            mono = format_monomial(m, self.variables)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, variables={self.variables})"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", 0)
        p = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expression(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.power()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.power()
        return p

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be a non-negative integer", tok[2])
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            num = int(value)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "num":
                    raise ParseError("denominator must be an integer literal", den_tok[2])
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2])
                c = Fraction(num, den)
            else:
                c = Fraction(num)
            try:
                return Polynomial.constant(c, self.variables, self.field)
            except FieldError as exc:
                raise FieldError(f"{exc} (at position {pos})") from exc
        if kind == "name":
            if value not in self.variables:
                raise UnknownVariableError(
                    f"unknown variable {value!r}; declared {list(self.variables)}", pos
                )
            return Polynomial.variable(value, self.variables, self.field)
        if kind == "op" and value == "(":
            p = self.expression()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_poly(text, variables, field=QQ):
    """Parse ``text`` into a polynomial over ``variables``.

    Grammar: signed terms joined by ``+``/``-``; a term is a product of
    factors joined by ``*``; a factor is an integer, a fraction ``p/q``, a
    variable, or a parenthesised expression, optionally raised to ``^k``.
    Whitespace is ignored.

    >>> parse_poly("y^2 - x^3", ["x", "y"]).format()
    '-x^3 + y^2'
    """
    variables = tuple(variables)
    if not variables:
        raise ValueError("at least one variable is required")
    if len(set(variables)) != len(variables):
        raise ValueError(f"variable names must be distinct: {variables}")
    return _Parser(text, variables, field).parse()


def mul(p, q):
    """Exact product; both operands must share variables and field."""
    p._check(q)
    return p * q


def jacobian(f):
    """Tuple of formal partial derivatives, in variable order."""
    return tuple(f.derivative(i) for i in range(f.nvars))
