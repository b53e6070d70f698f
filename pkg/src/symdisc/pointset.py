"""Construction of digit-scrambled and symmetrized 2D point sets.

A pattern (sigma, word) of length n over base b defines b^n points: index
digits a_0..a_{n-1} give y = sum a_i / b^(i+1), and x applies component i of
the pattern to digit a_i before reversing the digit order. The symmetrized
set is the multiset union with the companion-pattern set, which equals the
union with the reflection x -> 1 - 1/b^n - x of the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from symdisc.permutations import SigmaPattern, pattern_star

__all__ = [
    "DEFAULT_SIZE_CAP",
    "SizeCapError",
    "PointSet",
    "scrambled_hammersley",
    "symmetrized",
    "reflect_x",
]

DEFAULT_SIZE_CAP = 4096

LABELS = ("scrambled", "scrambled-star", "symmetrized")


class SizeCapError(ValueError):
    """b^n exceeds the configured size cap."""


@dataclass(frozen=True)
class PointSet:
    """A multiset of 2D points with coordinates on the grid m/b^n.

    ``points`` keeps multiplicity: symmetrized sets of odd base contain
    coincident points, and every formula here counts them with multiplicity.
    """

    b: int
    n: int
    points: tuple[tuple[Fraction, Fraction], ...]
    label: str

    def __post_init__(self) -> None:
        if self.label not in LABELS:
            raise ValueError(f"unknown label {self.label!r}")

    @property
    def size(self) -> int:
        """Number of points, counted with multiplicity."""
        return len(self.points)


def _check_cap(b: int, n: int, size_cap: int | None) -> None:
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if b**n > cap:
        raise SizeCapError(f"b^n = {b**n} exceeds the size cap {cap}")


def scrambled_hammersley(
    pattern: SigmaPattern,
    n: int | None = None,
    size_cap: int | None = None,
    _label: str = "scrambled",
) -> PointSet:
    """The b^n-point digit-scrambled set for a pattern of length n.

    Point order follows the index M = sum a_i * b^i, fixed for
    reproducibility only. Both coordinate families enumerate the full grid
    {0, 1/b^n, ..., (b^n-1)/b^n} exactly once.
    """
    b = pattern.b
    if n is not None and n != pattern.n:
        raise ValueError(f"n = {n} disagrees with word length {pattern.n}")
    n = pattern.n
    _check_cap(b, n, size_cap)
    comps = [p.images for p in pattern.components()]
    total = b**n
    points = []
    for m in range(total):
        x_num = 0
        y_num = 0
        rest = m
        for i in range(n):
            rest, a = divmod(rest, b)
            x_num += comps[i][a] * b**i
            y_num += a * b ** (n - 1 - i)
        points.append((Fraction(x_num, total), Fraction(y_num, total)))
    return PointSet(b, n, tuple(points), _label)


def symmetrized(pattern: SigmaPattern, n: int | None = None, size_cap: int | None = None) -> PointSet:
    """Multiset union of the pattern's set and its companion-pattern set.

    Cardinality with multiplicity is exactly 2*b^n.
    """
    first = scrambled_hammersley(pattern, n, size_cap)
    second = scrambled_hammersley(pattern_star(pattern), n, size_cap, _label="scrambled-star")
    return PointSet(first.b, first.n, first.points + second.points, "symmetrized")


def reflect_x(ps: PointSet) -> PointSet:
    """Map every point (x, y) to (1 - 1/b^n - x, y).

    Applies to scrambled-type sets; reflecting twice restores the original.
    """
    if ps.label == "symmetrized":
        raise ValueError("reflect_x expects a scrambled-type point set")
    edge = Fraction(ps.b**ps.n - 1, ps.b**ps.n)
    label = "scrambled-star" if ps.label == "scrambled" else "scrambled"
    return PointSet(ps.b, ps.n, tuple((edge - x, y) for x, y in ps.points), label)
