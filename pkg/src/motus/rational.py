"""Coercion and canonical text form for the exact scalar type.

``fractions.Fraction`` is the scalar throughout the package; these helpers
keep construction strict (no binary floats) and serialization canonical.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

RationalLike = Union[int, str, Fraction, Decimal]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to a Fraction without going through binary floats.

    Strings accept ``"p/q"``, integers and finite decimal literals.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite decimal {value}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: RationalLike) -> str:
    """Canonical ``p/q`` text, lowest terms, denominator always written."""
    q = as_rational(value)
    return f"{q.numerator}/{q.denominator}"
