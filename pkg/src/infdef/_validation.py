"""Input validation helpers shared by the estimators and module functions."""

import numbers

from .exceptions import ParameterError, RingMismatchError
from .poly import MonomialOrder, Polynomial, as_order


def check_order(order):
    if isinstance(order, MonomialOrder):
        return order
    try:
        return as_order(order)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc


def check_polynomial(p, name="polynomial"):
    if not isinstance(p, Polynomial):
        raise TypeError(f"{name} must be a Polynomial, got {type(p).__name__}")
    return p


def check_polynomials(polys, allow_empty=True):
    """Validate a sequence of polynomials sharing one ring; returns a list.

    A single :class:`Polynomial` is accepted and wrapped.
    """
    if isinstance(polys, Polynomial):
        polys = [polys]
    polys = list(polys)
    if not polys and not allow_empty:
        raise ValueError("at least one polynomial is required")
    for p in polys:
        check_polynomial(p)
    for p in polys[1:]:
        _same(polys[0], p)
    return polys


def _same(a, b):
    if a.variables != b.variables:
        raise RingMismatchError(f"variable lists differ: {a.variables} vs {b.variables}")
    if a.field != b.field:
        raise RingMismatchError(f"fields differ: {a.field!r} vs {b.field!r}")


def check_same_ring(p, other):
    """``other`` is a Polynomial or anything with ``variables`` and ``field``."""
    check_polynomial(p)
    _same(other, p)
    return p


def check_int(value, name, minimum=None, maximum=None):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise ParameterError(f"{name} must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise ParameterError(f"{name} must be <= {maximum}, got {value}")
    return value


def check_choice(value, name, choices):
    if value not in choices:
        raise ParameterError(f"{name} must be one of {sorted(choices)}, got {value!r}")
    return value
