"""Permutations of {0,...,b-1}, the digit reversal, and scrambling patterns.

The digit reversal ``reversal(b)`` maps k to b-1-k. Permutations commuting
with it play a special role: they are exactly the ones the symmetrized
closed forms apply to, and they are determined by their values on the lower
half {0,...,floor(b/2)-1} (for odd b the middle digit is always fixed).
``PartialPermutation`` captures such a lower-half assignment; the search
enumerates the floor(b/2)! of them whose lower half maps into itself.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

__all__ = [
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


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0,...,b-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        b = len(self.images)
        if b < 2:
            raise ValueError(f"base must be >= 2, got {b}")
        if sorted(self.images) != list(range(b)):
            raise ValueError(f"not a bijection of 0..{b - 1}: {self.images}")

    @property
    def b(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k]

    @classmethod
    def identity(cls, b: int) -> "Permutation":
        return cls(tuple(range(b)))


@dataclass(frozen=True)
class PartialPermutation:
    """A bijection of the lower half {0,...,floor(b/2)-1} for base b."""

    b: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError(f"base must be >= 2, got {self.b}")
        m = self.b // 2
        if sorted(self.images) != list(range(m)):
            raise ValueError(
                f"lower-half images must be a bijection of 0..{m - 1}: {self.images}"
            )

    @classmethod
    def identity(cls, b: int) -> "PartialPermutation":
        return cls(b, tuple(range(b // 2)))


@dataclass(frozen=True)
class SigmaPattern:
    """A base permutation plus a word over {s, c} choosing sigma or its conjugate.

    Component i of the pattern is ``sigma`` where the word has an ``s`` and
    the conjugate (reversal composed with sigma) where it has a ``c``.
    Component i scrambles digit a_i of a point index, the digit of weight
    b^(n-1-i) in the y coordinate.
    """

    sigma: Permutation
    word: str

    def __post_init__(self) -> None:
        if len(self.word) < 1:
            raise ValueError("word must have length >= 1")
        if set(self.word) - {"s", "c"}:
            raise ValueError(f"word may contain only 's' and 'c': {self.word!r}")

    @property
    def b(self) -> int:
        return self.sigma.b

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def l(self) -> int:
        """Number of components equal to sigma itself."""
        return self.word.count("s")

    def component(self, i: int) -> Permutation:
        return self.sigma if self.word[i] == "s" else conjugate(self.sigma)

    def components(self) -> tuple[Permutation, ...]:
        return tuple(self.component(i) for i in range(self.n))


def reversal(b: int) -> Permutation:
    """The permutation k -> b-1-k."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    return Permutation(tuple(b - 1 - k for k in range(b)))


def conjugate(sigma: Permutation) -> Permutation:
    """Compose the reversal after sigma: k -> b-1-sigma(k)."""
    b = sigma.b
    return Permutation(tuple(b - 1 - v for v in sigma.images))


def commutes_with_reversal(sigma: Permutation) -> bool:
    """True iff sigma(b-1-k) = b-1-sigma(k) for all k."""
    b = sigma.b
    img = sigma.images
    return all(img[b - 1 - k] == b - 1 - img[k] for k in range(b))


def extend_partial(p: PartialPermutation) -> Permutation:
    """Extend a lower-half assignment to the full commuting permutation.

    The upper half is forced by sigma(b-1-k) = b-1-sigma(k); for odd b the
    middle digit (b-1)/2 is a fixed point.
    """
    b = p.b
    m = b // 2
    images = list(p.images) + [0] * (b - m)
    if b % 2:
        images[m] = m
    for k in range(m):
        images[b - 1 - k] = b - 1 - images[k]
    return Permutation(tuple(images))


def enumerate_partials(b: int) -> Iterator[PartialPermutation]:
    """All floor(b/2)! lower-half assignments, lexicographic by images."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    m = b // 2
    for images in itertools.permutations(range(m)):
        yield PartialPermutation(b, images)


def complementary_swap(sigma: Permutation, d: int) -> Permutation:
    """Swap the images at positions d and b-1-d.

    Requires a permutation commuting with the reversal; the result commutes
    as well, and the leading constant of the symmetrized point set is
    invariant under this operation.
    """
    b = sigma.b
    if not 0 <= d <= b - 1:
        raise ValueError(f"digit out of range: {d}")
    if not commutes_with_reversal(sigma):
        raise ValueError("permutation does not commute with the reversal")
    images = list(sigma.images)
    images[d], images[b - 1 - d] = images[b - 1 - d], images[d]
    return Permutation(tuple(images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, b: int) -> PartialPermutation:
    """Parse cycle notation like ``"(0,3)(1,2)"`` into a lower-half assignment.

    Digits must lie in {0,...,floor(b/2)-1}; for odd b the middle digit
    (b-1)/2 is always a fixed point and may not appear. ``"id"`` gives the
    identity. Whitespace is ignored; cycles must be disjoint.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    m = b // 2
    compact = "".join(text.split())
    if compact == "id":
        return PartialPermutation.identity(b)
    if not compact:
        raise ValueError("empty cycle expression")
    rest = _CYCLE_RE.sub("", compact)
    if rest:
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(m))
    seen: set[int] = set()
    for group in _CYCLE_RE.findall(compact):
        if not group:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            digits = [int(tok) for tok in group.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed cycle notation: {text!r}") from exc
        for d in digits:
            if b % 2 and d == m:
                raise ValueError(
                    f"digit {d} is the middle digit of base {b} and must stay fixed"
                )
            if not 0 <= d < m:
                raise ValueError(f"digit {d} out of range 0..{m - 1} for base {b}")
            if d in seen:
                raise ValueError(f"digit {d} appears twice in {text!r}")
            seen.add(d)
        for k, d in enumerate(digits):
            images[d] = digits[(k + 1) % len(digits)]
    return PartialPermutation(b, tuple(images))


def format_cycles(p: PartialPermutation) -> str:
    """Cycle notation for a lower-half assignment, ``"id"`` for the identity.

    Cycles are ordered by their smallest element and start at it, so the
    output is canonical and round-trips through ``parse_cycles``.
    """
    m = p.b // 2
    visited = [False] * m
    parts: list[str] = []
    for start in range(m):
        if visited[start] or p.images[start] == start:
            visited[start] = True
            continue
        cycle = [start]
        visited[start] = True
        k = p.images[start]
        while k != start:
            cycle.append(k)
            visited[k] = True
            k = p.images[k]
        parts.append("(" + ",".join(str(d) for d in cycle) + ")")
    return "".join(parts) if parts else "id"


def pattern_star(pattern: SigmaPattern) -> SigmaPattern:
    """The companion pattern with every component conjugated (s and c swapped)."""
    flipped = pattern.word.translate(str.maketrans("sc", "cs"))
    return SigmaPattern(pattern.sigma, flipped)
