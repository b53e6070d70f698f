"""Exact rational arithmetic shared by every module.

The canonical number type is ``fractions.Fraction`` from the standard
library: arbitrary precision, always stored normalized (positive denominator,
gcd 1, zero as 0/1), immutable and therefore safe to share across workers.
This module pins that choice under the name ``Rational`` and adds the
formatting and parsing helpers the serialization formats rely on.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Rational", "rat", "to_decimal", "format_rational", "parse_rational"]

Rational = Fraction


def rat(num: int, den: int = 1) -> Fraction:
    """Build a normalized rational from an integer numerator/denominator."""
    return Fraction(num, den)


def to_decimal(x: Fraction | int, digits: int) -> str:
    """Decimal expansion of ``x`` with exactly ``digits`` fractional digits.

    Rounds half to even. ``digits`` must be at least 1.
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    num, den = abs(x).numerator, abs(x).denominator
    scale = 10**digits
    q, r = divmod(num * scale, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_rational(x: Fraction | int) -> str:
    """Render as ``"p/q"`` with q > 0 and gcd(p, q) = 1 (zero is ``"0/1"``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer string."""
    return Fraction(text.strip())
