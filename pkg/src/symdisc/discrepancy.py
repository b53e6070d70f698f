"""Exact local discrepancy and exact squared L2 discrepancy, three ways.

``local_discrepancy`` counts points in an anchored half-open box directly.
``warnock_l2_sq`` expands the double integral of the squared local
discrepancy into pairwise sums over the points; it is the package's
independent oracle and needs nothing but the coordinates.
``faure_local_discrepancy`` evaluates the same local discrepancy at grid
points through the per-digit formula, and ``faure_l2_sq`` integrates that
formula exactly over the grid cells. All three agree exactly, and the test
suite insists on it.
"""

from __future__ import annotations

import math
from fractions import Fraction

from symdisc.permutations import SigmaPattern, pattern_star
from symdisc.phi import phi
from symdisc.pointset import PointSet

__all__ = [
    "count_box",
    "local_discrepancy",
    "warnock_l2_sq",
    "l2_sq_by_cells",
    "EpsilonContext",
    "faure_local_discrepancy",
    "faure_l2_sq",
    "grid_round",
]


def count_box(ps: PointSet, x: Fraction, y: Fraction) -> int:
    """Points (with multiplicity) in [0, x) x [0, y); both inequalities strict."""
    return sum(1 for px, py in ps.points if px < x and py < y)


def local_discrepancy(ps: PointSet, x: Fraction, y: Fraction) -> Fraction:
    """count_box minus size * x * y, exact."""
    return count_box(ps, x, y) - ps.size * Fraction(x) * Fraction(y)


def warnock_l2_sq(ps: PointSet) -> Fraction:
    """Integral over the unit square of the squared local discrepancy.

    Expanded into pairwise sums:

        sum_{m,m'} (1 - max(x_m, x_m'))(1 - max(y_m, y_m'))
        - (size/2) * sum_m (1 - x_m^2)(1 - y_m^2)
        + size^2 / 9

    Coordinates are scaled to a common denominator so the O(size^2) pair loop
    runs on plain integers; the result is exact.
    """
    pts = ps.points
    n_pts = len(pts)
    den = math.lcm(*(c.denominator for p in pts for c in p)) if pts else 1
    xs = [int(p[0] * den) for p in pts]
    ys = [int(p[1] * den) for p in pts]
    pair_sum = 0
    single_sum = 0
    den2 = den * den
    for i in range(n_pts):
        xi, yi = xs[i], ys[i]
        pair_sum += (den - xi) * (den - yi)
        single_sum += (den2 - xi * xi) * (den2 - yi * yi)
        for j in range(i + 1, n_pts):
            xj, yj = xs[j], ys[j]
            mx = xi if xi >= xj else xj
            my = yi if yi >= yj else yj
            pair_sum += 2 * (den - mx) * (den - my)
    return (
        Fraction(pair_sum, den2)
        - Fraction(n_pts * single_sum, 2 * den2 * den2)
        + Fraction(n_pts * n_pts, 9)
    )


def l2_sq_by_cells(ps: PointSet) -> Fraction:
    """Second, slower route to the same integral: piecewise integration.

    The box count is constant on each rectangle of the grid induced by the
    distinct point coordinates, so the integrand (count - size*x*y)^2 can be
    integrated cell by cell in closed form. Used to cross-check the pair
    formula.
    """
    n_pts = ps.size
    xs = sorted({p[0] for p in ps.points} | {Fraction(0), Fraction(1)})
    ys = sorted({p[1] for p in ps.points} | {Fraction(0), Fraction(1)})
    total = Fraction(0)
    for i in range(len(xs) - 1):
        x0, x1 = xs[i], xs[i + 1]
        ix = (x1 * x1 - x0 * x0) / 2
        ixx = (x1**3 - x0**3) / 3
        for j in range(len(ys) - 1):
            y0, y1 = ys[j], ys[j + 1]
            count = sum(1 for px, py in ps.points if px <= x0 and py <= y0)
            iy = (y1 * y1 - y0 * y0) / 2
            iyy = (y1**3 - y0**3) / 3
            total += (
                count * count * (x1 - x0) * (y1 - y0)
                - 2 * n_pts * count * ix * iy
                + n_pts * n_pts * ixx * iyy
            )
    return total


class EpsilonContext:
    """Digit data behind the per-digit local-discrepancy formula.

    Index conventions, fixed once here so every consumer agrees:

    * lam = lam_1*b^(n-1) + ... + lam_n, most significant digit first;
      Lambda(j) = lam_j*b^(n-j) + ... + lam_n is the tail starting at j.
    * N = N_{n-1}*b^(n-1) + ... + N_0, digit N_i of weight b^i; component
      permutation s_i pairs with digit N_i, and
      nu(j) = s_j(N_j)*b^(n-j-1) + ... + s_{n-1}(N_{n-1}).
    * A SigmaPattern orders components the other way around: its component i
      scrambles point digit a_i, which carries weight b^(n-1-i) in the y
      index. The constructor therefore reverses the pattern's components, so
      that this context and the point construction describe the same set.

    For lam = b^n or N = b^n every epsilon is 0.
    """

    def __init__(self, pattern: SigmaPattern, lam: int, big_n: int):
        b, n = pattern.b, pattern.n
        if not 1 <= lam <= b**n:
            raise ValueError(f"lam out of range 1..{b**n}: {lam}")
        if not 1 <= big_n <= b**n:
            raise ValueError(f"N out of range 1..{b**n}: {big_n}")
        self.b = b
        self.n = n
        self.pattern = pattern
        self.lam = lam
        self.big_n = big_n
        self.degenerate = lam == b**n or big_n == b**n
        self.components = tuple(reversed(pattern.components()))
        # lam_digits[j-1] = lam_j (most significant first)
        self.lam_digits = tuple((lam // b ** (n - j)) % b for j in range(1, n + 1))
        # n_digits[i] = N_i (least significant first)
        self.n_digits = tuple((big_n // b**i) % b for i in range(n))

    def Lambda(self, j: int) -> int:
        """Tail lam_j*b^(n-j) + ... + lam_n of the lam expansion, 1 <= j <= n."""
        if not 1 <= j <= self.n:
            raise ValueError(f"index out of range 1..{self.n}: {j}")
        return self.lam % self.b ** (self.n - j + 1)

    def nu(self, j: int) -> int:
        """Scrambled upper digits of N: sum of s_i(N_i)*b^(n-i-1) for i >= j."""
        if not 1 <= j <= self.n:
            raise ValueError(f"index out of range 1..{self.n}: {j}")
        return sum(
            self.components[i].images[self.n_digits[i]] * self.b ** (self.n - i - 1)
            for i in range(j, self.n)
        )

    def epsilon(self, j: int) -> int:
        """The digit selecting which per-digit function enters at level j.

        epsilon(n) is the last lam digit. For j < n the tail Lambda(j) is
        located relative to nu(j): at most nu(j) gives 0, each following
        block of length b^(n-j) gives h = 1, ..., b-1, and the remainder
        beyond the last block gives 0 again.
        """
        if not 1 <= j <= self.n:
            raise ValueError(f"index out of range 1..{self.n}: {j}")
        if self.degenerate:
            return 0
        if j == self.n:
            return self.lam_digits[self.n - 1]
        block = self.b ** (self.n - j)
        offset = self.Lambda(j) - self.nu(j)
        if offset <= 0 or offset > (self.b - 1) * block:
            return 0
        return -(-offset // block)


def faure_local_discrepancy(pattern: SigmaPattern, lam: int, big_n: int) -> Fraction:
    """Local discrepancy of the pattern's point set at (lam/b^n, N/b^n).

    Computed digit by digit: the sum over j of the epsilon(j)-th per-digit
    function of the j-th context component, evaluated at N/b^j. Agrees
    exactly with direct box counting at every grid point.
    """
    ctx = EpsilonContext(pattern, lam, big_n)
    b, n = ctx.b, ctx.n
    total = Fraction(0)
    for j in range(1, n + 1):
        total += phi(b, ctx.epsilon(j), ctx.components[j - 1], Fraction(big_n, b**j))
    return total


def grid_round(x: Fraction, b: int, n: int) -> Fraction:
    """Smallest grid point m/b^n >= x with m in {1, ..., b^n}; 0 < x <= 1."""
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"x must lie in (0, 1], got {x}")
    return Fraction(math.ceil(x * b**n), b**n)


def faure_l2_sq(pattern: SigmaPattern, what: str = "scrambled") -> Fraction:
    """Squared scaled L2 discrepancy via the digit formula, integrated exactly.

    Every point coordinate lies on the grid m/b^n, so on each grid cell the
    local discrepancy is its grid-corner value plus size*(corner product -
    xy); both parts integrate in closed form over the cell. For
    what="scrambled" this returns (b^n L2)^2 of the pattern's set, for
    what="sym" it returns (2 b^n L2)^2 of the symmetrized set, using the fact
    that the symmetrized local discrepancy is the sum of the two patterns'.
    """
    if what not in ("scrambled", "sym"):
        raise ValueError(f"what must be 'scrambled' or 'sym', got {what!r}")
    b, n = pattern.b, pattern.n
    grid = b**n
    size = grid if what == "scrambled" else 2 * grid
    star = pattern_star(pattern) if what == "sym" else None
    d2 = Fraction(grid * grid)
    d4 = d2 * d2
    d6 = d4 * d2
    total = Fraction(0)
    for lam in range(1, grid + 1):
        for big_n in range(1, grid + 1):
            e = faure_local_discrepancy(pattern, lam, big_n)
            if star is not None:
                e += faure_local_discrepancy(star, lam, big_n)
            corner = Fraction(lam * big_n) / d2
            int_lin = Fraction(2 * lam + 2 * big_n - 1, 4) / d4
            int_sq = (
                corner * corner / d2
                - corner * Fraction(2 * (2 * lam - 1) * (2 * big_n - 1), 4) / d4
                + Fraction((3 * lam * lam - 3 * lam + 1) * (3 * big_n * big_n - 3 * big_n + 1), 9) / d6
            )
            total += e * e / d2 + 2 * e * size * int_lin + size * size * int_sq
    return total
