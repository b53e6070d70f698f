"""Exact L2 discrepancy of digit-scrambled and symmetrized Hammersley point sets.

Everything in this package is computed in exact rational arithmetic: point
sets live on the grid m/b^n, local discrepancies are exact fractions, squared
L2 discrepancies come out as fractions from three independent routes (direct
Warnock-style pair summation, a per-digit local-discrepancy formula, and
closed forms), and the search for the scrambling permutation with the lowest
leading constant compares exact values only.
"""

__version__ = "0.1.0"

from symdisc.exact_arith import Rational, rat, to_decimal, format_rational, parse_rational
from symdisc.permutations import (
    Permutation,
    PartialPermutation,
    SigmaPattern,
    reversal,
    conjugate,
    commutes_with_reversal,
    extend_partial,
    enumerate_partials,
    complementary_swap,
    parse_cycles,
    format_cycles,
    pattern_star,
)

__all__ = [
    "Rational",
    "rat",
    "to_decimal",
    "format_rational",
    "parse_rational",
    "Permutation",
    "PartialPermutation",
    "SigmaPattern",
    "reversal",
    "conjugate",
    "commutes_with_reversal",
    "extend_partial",
    "enumerate_partials",
    "complementary_swap",
    "parse_cycles",
    "format_cycles",
    "pattern_star",
]
