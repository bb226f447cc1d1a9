"""Exact rational values and their textual forms.

Every lot, probability and game value in this package is a
:class:`fractions.Fraction`: arbitrary precision, always in canonical form
(positive denominator, gcd 1), with exact comparisons. This module adds the
textual conventions shared by the CLI, JSON and CSV surfaces: the "p/q" wire
form, and a truncating decimal rendering used only for human display next to
the exact value.

No floating point enters any computation; floats are rejected outright when
coercing inputs.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

DEFAULT_DECIMAL_DIGITS = 6

_NUMERATOR_RE = re.compile(r"^[+-]?\d+$")
_DENOMINATOR_RE = re.compile(r"^\d+$")


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" wire form, or a bare integer "p" meaning p/1.

    The sign, if any, goes on p; q must be a plain positive integer.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    """
    body = text.strip()
    numerator, slash, denominator = body.partition("/")
    if not _NUMERATOR_RE.match(numerator):
        raise ValueError(f"malformed rational {text!r}: expected 'p' or 'p/q'")
    if not slash:
        return Fraction(int(numerator))
    if not _DENOMINATOR_RE.match(denominator):
        raise ValueError(f"malformed rational {text!r}: denominator must be a plain integer")
    if int(denominator) == 0:
        raise ValueError(f"malformed rational {text!r}: denominator must be positive")
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Fraction) -> str:
    """Render in the "p/q" wire form; integers come out as a bare "p"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: Fraction | int | str) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to an exact Fraction.

    Floats are rejected: a binary float is almost never the exact quantity
    the caller means, and silently accepting one would poison exact results.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {type(value).__name__} {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def decimal_string(value: Fraction, digits: int = DEFAULT_DECIMAL_DIGITS) -> str:
    """Decimal rendering truncated toward zero after `digits` places.

    Display only; the exact "p/q" form is always what gets compared.

    >>> decimal_string(Fraction(2828, 5525))
    '0.511855'
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    sign = "-" if value < 0 else ""
    magnitude = abs(value)
    whole, remainder = divmod(magnitude.numerator, magnitude.denominator)
    if digits == 0:
        return f"{sign}{whole}"
    places = []
    for _ in range(digits):
        remainder *= 10
        digit, remainder = divmod(remainder, magnitude.denominator)
        places.append(str(digit))
    return f"{sign}{whole}." + "".join(places)


def approx_string(value: Fraction, digits: int = DEFAULT_DECIMAL_DIGITS) -> str:
    """The standard two-part rendering: exact form first, decimal alongside."""
    return f"{format_rational(value)} ≈ {decimal_string(value, digits)}"


def compare(x: Fraction, y: Fraction) -> int:
    """Exact three-way comparison: -1, 0 or 1 as x is below, equal to or above y."""
    if x < y:
        return -1
    if x > y:
        return 1
    return 0
