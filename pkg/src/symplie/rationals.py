"""Exact rational scalars.

gmpy2's ``mpq`` is used when available (it is much faster for the dense
family sweeps); the stdlib ``Fraction`` is a drop-in replacement
otherwise.  Every scalar enters the package through :func:`as_q` or
:func:`parse_rational`, so the two backends are interchangeable.

Serialized rationals are strings ``"p"`` or ``"p/q"`` in lowest terms
with a positive denominator and no whitespace; :func:`qstr` produces
exactly that grammar and :func:`parse_rational` accepts nothing else.
"""

from __future__ import annotations

import re

from .errors import SymplieError

try:
    from gmpy2 import mpq as Q

    GMPY2_BACKEND = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q

    GMPY2_BACKEND = False

ZERO = Q(0)
ONE = Q(1)
THIRD = Q(1, 3)

_RATIONAL = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?\Z")


class RationalSyntaxError(SymplieError, ValueError):
    """A string did not match the serialization grammar for rationals."""


def parse_rational(text: str):
    """Parse ``"p"`` or ``"p/q"`` into an exact rational.

    Denominators are normalized away, so non-lowest-terms input is
    accepted; malformed strings (whitespace, decimals, empty, q = 0)
    are rejected.
    """
    if not isinstance(text, str) or _RATIONAL.match(text) is None:
        raise RationalSyntaxError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise RationalSyntaxError(f"zero denominator: {text!r}")
        return Q(int(num), int(den))
    return Q(int(text))


def as_q(value):
    """Coerce ints, rational strings and rational-like numbers to Q.

    Floats are rejected: everything in this package is exact.
    """
    if type(value) is type(ZERO):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass an int, string or rational")
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        return Q(int(num), int(den))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def qstr(value) -> str:
    """Canonical string form: lowest terms, positive denominator."""
    return str(as_q(value))
