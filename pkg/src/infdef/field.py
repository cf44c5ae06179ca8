"""Exact coefficient fields: the rationals and prime fields.

Field objects are callables turning ints, ``Fraction`` values or numeric
strings into canonical elements.  Elements of both fields support the usual
arithmetic operators, so polynomial and matrix code never needs to know
which field it runs over.
"""

from fractions import Fraction
from functools import total_ordering

from .exceptions import FieldError


class RationalField:
    """The field of rational numbers, elements are ``fractions.Fraction``."""

    characteristic = 0
    name = "Q"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"invalid rational {value!r}") from exc
        if isinstance(value, GFElement):
            raise FieldError("cannot coerce a prime-field residue into Q")
        raise FieldError(f"cannot coerce {value!r} into Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def format(self, value):
        return str(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


@total_ordering
class GFElement:
    """Residue class modulo a prime ``p``, kept in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldError(f"mixing residues mod {self.p} and mod {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldError(f"{other} is not representable mod {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return GFElement(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return GFElement(o * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if k < 0:
            return GFElement(pow(self.value, -1, self.p), self.p) ** (-k)
        return GFElement(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return other.p == self.p and other.value == self.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __lt__(self, other):
        # only for deterministic sorting; not a field order
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.value} mod {self.p})"

    def __str__(self):
        return str(self.value)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """The field with ``p`` elements."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"{p!r} is not a prime")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    @property
    def name(self):
        return f"Fp:{self.p}"

    def __call__(self, value):
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise FieldError(f"residue mod {value.p} is not in GF({self.p})")
            return value
        if isinstance(value, str):
            value = RationalField()(value)
        if isinstance(value, int):
            return GFElement(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"coefficient {value} is not representable mod {self.p}")
            return GFElement(value.numerator * pow(value.denominator, -1, self.p), self.p)
        raise FieldError(f"cannot coerce {value!r} into GF({self.p})")

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def format(self, value):
        return str(value.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def field_from_string(text):
    """Parse a field descriptor: ``Q`` or ``Fp:<p>``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError as exc:
            raise FieldError(f"bad prime in field descriptor {text!r}") from exc
        return PrimeField(p)
    raise FieldError(f"unknown field descriptor {text!r}; expected Q or Fp:<p>")
