"""Per-digit counting functions and their exact integrals.

For a base b, a digit h and a scrambling permutation sigma, ``phi(b, h,
sigma, x)`` is the piecewise-linear, 1-periodic function that measures how
the first k entries of the scrambled digit sequence sigma(0)/b, ...,
sigma(b-1)/b over- or undershoot the expected count in [0, h/b), where k is
the cell index of {x}. These functions are the building blocks of every
exact closed form in this package: single functions combine into sums,
squared sums and products with the conjugate permutation's functions, and
the normalized integrals of those aggregates are the constants the closed
forms are assembled from.

Aggregates are materialized once per (b, sigma, kind) as an exact piecewise
polynomial and cached; pointwise evaluation and integration both read the
cached form, so the two can never disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from symdisc.permutations import Permutation, conjugate

__all__ = [
    "PhiKind",
    "SUM",
    "SQUARE_SUM",
    "CROSS_SUM",
    "CROSS_SUM_UP",
    "CROSS_SUM_DOWN",
    "PiecewisePoly",
    "phi",
    "phi_as_piecewise",
    "phi_aggregate",
    "phi_integral",
    "phi_integral_closed",
]

_TAGS = ("single", "sum", "square_sum", "cross_sum", "cross_sum_up", "cross_sum_down")


@dataclass(frozen=True)
class PhiKind:
    """Selector for an aggregate of the per-digit functions.

    single:         one function, index h
    sum:            sum over h of phi_h
    square_sum:     sum over h of phi_h squared
    cross_sum:      sum over h of phi_h times the conjugate's phi_h
    cross_sum_up:   sum over h of phi_{h+1} times the conjugate's phi_h
    cross_sum_down: sum over h of phi_h times the conjugate's phi_{h+1}
    """

    tag: str
    h: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise ValueError(f"unknown kind tag {self.tag!r}")
        if self.tag == "single":
            if self.h is None or self.h < 0:
                raise ValueError("single kind needs a digit h >= 0")
        elif self.h is not None:
            raise ValueError(f"kind {self.tag!r} takes no digit")

    @classmethod
    def single(cls, h: int) -> "PhiKind":
        return cls("single", h)


SUM = PhiKind("sum")
SQUARE_SUM = PhiKind("square_sum")
CROSS_SUM = PhiKind("cross_sum")
CROSS_SUM_UP = PhiKind("cross_sum_up")
CROSS_SUM_DOWN = PhiKind("cross_sum_down")

_ZERO = Fraction(0)


@dataclass(frozen=True)
class PiecewisePoly:
    """A polynomial of degree <= 2 on each cell [k/b, (k+1)/b) of [0, 1].

    ``coeffs[k]`` holds (c0, c1, c2) with value c0 + c1*x + c2*x^2 on cell k.
    """

    b: int
    coeffs: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.b:
            raise ValueError("need one coefficient triple per cell")

    @property
    def degree(self) -> int:
        deg = 0
        for c0, c1, c2 in self.coeffs:
            if c2:
                return 2
            if c1:
                deg = 1
        return deg

    def evaluate(self, x: Fraction) -> Fraction:
        """Value at x in [0, 1]; x = 1 is evaluated on the last cell."""
        if not 0 <= x <= 1:
            raise ValueError(f"x must lie in [0, 1], got {x}")
        k = min(int(x * self.b), self.b - 1)
        c0, c1, c2 = self.coeffs[k]
        return c0 + c1 * x + c2 * x * x

    def integral(self) -> Fraction:
        """Exact integral over [0, 1] via cellwise antiderivatives."""
        total = _ZERO
        b = self.b
        for k, (c0, c1, c2) in enumerate(self.coeffs):
            x0, x1 = Fraction(k, b), Fraction(k + 1, b)
            total += (
                c0 * (x1 - x0)
                + c1 * (x1 * x1 - x0 * x0) / 2
                + c2 * (x1**3 - x0**3) / 3
            )
        return total

    def __add__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        if self.b != other.b:
            raise ValueError("cell counts differ")
        return PiecewisePoly(
            self.b,
            tuple(
                (a0 + b0, a1 + b1, a2 + b2)
                for (a0, a1, a2), (b0, b1, b2) in zip(self.coeffs, other.coeffs)
            ),
        )

    def __neg__(self) -> "PiecewisePoly":
        return PiecewisePoly(self.b, tuple((-c0, -c1, -c2) for c0, c1, c2 in self.coeffs))

    def __mul__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        if self.b != other.b:
            raise ValueError("cell counts differ")
        if self.degree + other.degree > 2:
            raise ValueError("product would exceed degree 2")
        out = []
        for (a0, a1, a2), (b0, b1, b2) in zip(self.coeffs, other.coeffs):
            out.append(
                (
                    a0 * b0,
                    a0 * b1 + a1 * b0,
                    a0 * b2 + a1 * b1 + a2 * b0,
                )
            )
        return PiecewisePoly(self.b, tuple(out))

    @classmethod
    def zero(cls, b: int) -> "PiecewisePoly":
        return cls(b, ((_ZERO, _ZERO, _ZERO),) * b)


def _count_below(sigma: Permutation, h: int, upto: int) -> int:
    """Number of positions l < upto with sigma(l) < h."""
    return sum(1 for l in range(upto) if sigma.images[l] < h)


def phi(b: int, h: int, sigma: Permutation, x: Fraction | int) -> Fraction:
    """Evaluate the per-digit function at {x} directly from its definition.

    On the cell [k/b, (k+1)/b) containing {x} the value is
    count - h*{x} when h <= sigma(k), and (b-h)*{x} - (k+1-count) when
    h > sigma(k), where count is the number of l <= k with sigma(l) < h.
    The value at {x} = 0 is 0, and h = 0 gives the zero function.
    """
    if sigma.b != b:
        raise ValueError(f"permutation has base {sigma.b}, expected {b}")
    if not 0 <= h <= b - 1:
        raise ValueError(f"digit h out of range 0..{b - 1}: {h}")
    if h == 0:
        return _ZERO
    fx = Fraction(x)
    fx -= math.floor(fx)
    k = int(fx * b)
    count = _count_below(sigma, h, k + 1)
    if h <= sigma.images[k]:
        return count - h * fx
    return (b - h) * fx - (k + 1 - count)


def _single_cells(b: int, h: int, sigma: Permutation) -> PiecewisePoly:
    """The per-digit function as a piecewise-linear polynomial on [0, 1]."""
    cells = []
    count = 0
    for k in range(b):
        if sigma.images[k] < h:
            count += 1
        if h <= sigma.images[k]:
            cells.append((Fraction(count), Fraction(-h), _ZERO))
        else:
            cells.append((Fraction(-(k + 1 - count)), Fraction(b - h), _ZERO))
    return PiecewisePoly(b, tuple(cells))


@lru_cache(maxsize=1024)
def phi_as_piecewise(b: int, sigma: Permutation, kind: PhiKind) -> PiecewisePoly:
    """Exact piecewise polynomial equal to the requested aggregate on [0, 1].

    Degree <= 1 for single and sum, <= 2 for the product kinds.
    """
    if sigma.b != b:
        raise ValueError(f"permutation has base {sigma.b}, expected {b}")
    if kind.tag == "single":
        if kind.h >= b:
            raise ValueError(f"digit h out of range 0..{b - 1}: {kind.h}")
        return _single_cells(b, kind.h, sigma)
    singles = [_single_cells(b, h, sigma) for h in range(b)]
    if kind.tag == "sum":
        acc = PiecewisePoly.zero(b)
        for s in singles:
            acc = acc + s
        return acc
    if kind.tag == "square_sum":
        acc = PiecewisePoly.zero(b)
        for s in singles:
            acc = acc + s * s
        return acc
    others = [_single_cells(b, h, conjugate(sigma)) for h in range(b)]
    acc = PiecewisePoly.zero(b)
    if kind.tag == "cross_sum":
        for h in range(b):
            acc = acc + singles[h] * others[h]
    elif kind.tag == "cross_sum_up":
        for h in range(b - 1):
            acc = acc + singles[h + 1] * others[h]
    else:  # cross_sum_down
        for h in range(b - 1):
            acc = acc + singles[h] * others[h + 1]
    return acc


def phi_aggregate(b: int, sigma: Permutation, kind: PhiKind, x: Fraction | int) -> Fraction:
    """Evaluate an aggregate at {x} by reading the cached piecewise form."""
    fx = Fraction(x)
    fx -= math.floor(fx)
    return phi_as_piecewise(b, sigma, kind).evaluate(fx)


@lru_cache(maxsize=None)
def phi_integral(b: int, sigma: Permutation, kind: PhiKind) -> Fraction:
    """The integral of an aggregate over [0, 1], divided by b. Exact."""
    return phi_as_piecewise(b, sigma, kind).integral() / b


def phi_integral_closed(b: int, sigma: Permutation) -> Fraction:
    """Closed form for the normalized integral of the plain sum aggregate:

        (1/b^2) * sum_k sigma(k)*k  -  (1/b) * ((b-1)/2)^2
    """
    if sigma.b != b:
        raise ValueError(f"permutation has base {sigma.b}, expected {b}")
    weighted = sum(sigma.images[k] * k for k in range(b))
    return Fraction(weighted, b * b) - Fraction((b - 1) ** 2, 4 * b)
