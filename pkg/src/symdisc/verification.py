"""Named check suites behind the ``verify`` CLI subcommand.

Each suite returns a list of CheckResult; the CLI prints one line per check
and exits nonzero if any failed. These are the same identities the test
suite pins down, packaged for quick command-line reproduction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from symdisc import discrepancy, formulas, pointset
from symdisc.permutations import (
    PartialPermutation,
    Permutation,
    SigmaPattern,
    complementary_swap,
    conjugate,
    enumerate_partials,
    extend_partial,
    reversal,
)
from symdisc.phi import CROSS_SUM, CROSS_SUM_DOWN, CROSS_SUM_UP, SUM, PhiKind, phi, phi_as_piecewise, phi_integral, phi_integral_closed
from symdisc.reference import FULL_SEARCH_PRACTICAL_MAX, REFERENCE_TABLE
from symdisc.search import search_min_c, verify_table_row

__all__ = ["CheckResult", "SUITES", "run_suites"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _commuting_permutations(b: int) -> list[Permutation]:
    """All permutations of base b commuting with the reversal."""
    out = []
    m = b // 2
    for partial in enumerate_partials(b):
        base = extend_partial(partial)
        # flip any subset of complementary pairs to leave the reduced class
        for mask in range(1 << m):
            sigma = base
            for d in range(m):
                if mask >> d & 1:
                    sigma = complementary_swap(sigma, d)
            out.append(sigma)
    return out


def suite_table(quick: bool = False, threads: int = 1) -> list[CheckResult]:
    """Reference table: row constants, leading digits, and full-search minima."""
    results = []
    full_max = 10 if quick else 16
    for row in REFERENCE_TABLE:
        mode = "full" if row.b <= full_max else "verify"
        report = verify_table_row(
            row.b, row.cycles, row.c, row.g, mode=mode,
            claimed_leading=row.leading6, threads=threads,
        )
        results.append(
            CheckResult(
                f"table b={row.b} [{mode}]",
                report.passed,
                f"c={report.c_computed} leading={report.leading_computed}",
            )
        )
    return results


def suite_symmetrized(quick: bool = False, threads: int = 1) -> list[CheckResult]:
    """Closed form for the symmetrized squared L2 equals the Warnock oracle."""
    results = []
    configs = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1)]
    if not quick:
        configs += [(2, 3), (3, 3), (4, 2)]
    for b, n in configs:
        sigmas = [Permutation.identity(b), reversal(b)]
        for sigma in sigmas:
            for word in itertools.product("sc", repeat=n):
                pattern = SigmaPattern(sigma, "".join(word))
                oracle = discrepancy.warnock_l2_sq(pointset.symmetrized(pattern))
                closed = formulas.symmetrized_l2_sq(b, n, sigma)
                ok = oracle == closed
                results.append(
                    CheckResult(
                        f"symmetrized b={b} n={n} sigma={sigma.images} word={''.join(word)}",
                        ok,
                        f"oracle={oracle} closed={closed}",
                    )
                )
    return results


def suite_scrambled(quick: bool = False, threads: int = 1) -> list[CheckResult]:
    """Closed form for the scrambled squared L2 equals the Warnock oracle."""
    results = []
    configs = [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]
    if not quick:
        configs += [(2, 3), (3, 3), (4, 2)]
    for b, n in configs:
        for sigma in (Permutation.identity(b), reversal(b)):
            for word in itertools.product("sc", repeat=n):
                pattern = SigmaPattern(sigma, "".join(word))
                oracle = discrepancy.warnock_l2_sq(pointset.scrambled_hammersley(pattern))
                closed = formulas.scrambled_l2_sq(b, n, sigma, pattern.l)
                results.append(
                    CheckResult(
                        f"scrambled b={b} n={n} sigma={sigma.images} word={''.join(word)}",
                        oracle == closed,
                        f"oracle={oracle} closed={closed}",
                    )
                )
    return results


def suite_constants(quick: bool = False, threads: int = 1) -> list[CheckResult]:
    """Constant identities: closed form vs integrals, swaps, identity formula."""
    results = []
    top = 6 if quick else 8
    for b in range(2, top + 1):
        ok = all(
            formulas.c_closed_form(b, sigma) == formulas.c_from_integrals(b, sigma)
            for sigma in _commuting_permutations(b)
        )
        results.append(CheckResult(f"closed-vs-integrals b={b} (whole class)", ok))
    rng = random.Random(20240917)
    swap_ok = True
    for _ in range(200):
        b = rng.randrange(2, 13)
        lower = list(range(b // 2))
        rng.shuffle(lower)
        sigma = extend_partial(PartialPermutation(b, tuple(lower)))
        d = rng.randrange(b)
        if formulas.c_closed_form(b, sigma) != formulas.c_closed_form(b, complementary_swap(sigma, d)):
            swap_ok = False
            break
    results.append(CheckResult("complementary-swap invariance (randomized)", swap_ok))
    id_ok = all(
        formulas.c_identity(b) == formulas.c_from_integrals(b, Permutation.identity(b))
        for b in range(2, 28)
    )
    results.append(CheckResult("identity-permutation formula b=2..27", id_ok))
    gap_ok = True
    for b in range(2, 9):
        want = Fraction(-1, 24) if b % 2 == 0 else Fraction(-(b * b - 1), 24 * b * b)
        for partial in enumerate_partials(b):
            if formulas.cross_sum_gap(b, extend_partial(partial)) != want:
                gap_ok = False
    results.append(CheckResult("cross-sum gap parity constant b=2..8", gap_ok))
    return results


def suite_phi(quick: bool = False, threads: int = 1) -> list[CheckResult]:
    """Per-digit function identities and integral formulas."""
    results = []
    rng = random.Random(4099)
    pieces_ok = True
    for b in range(2, 7):
        for trial in range(3):
            images = list(range(b))
            rng.shuffle(images)
            sigma = Permutation(tuple(images))
            for kind in (SUM, CROSS_SUM, CROSS_SUM_UP, CROSS_SUM_DOWN):
                poly = phi_as_piecewise(b, sigma, kind)
                for k in range(50):
                    x = Fraction(k, 49)
                    direct = _direct_aggregate(b, sigma, kind, x)
                    if poly.evaluate(x) != direct:
                        pieces_ok = False
    results.append(CheckResult("piecewise forms match pointwise sums", pieces_ok))
    rev_ok = True
    for b in range(2, 8):
        for trial in range(4):
            images = list(range(b))
            rng.shuffle(images)
            sigma = Permutation(tuple(images))
            bar = conjugate(sigma)
            for h in range(1, b):
                left = phi_as_piecewise(b, bar, PhiKind.single(h))
                right = -phi_as_piecewise(b, sigma, PhiKind.single(b - h))
                if left != right:
                    rev_ok = False
    results.append(CheckResult("conjugate reversal identity (piecewise equality)", rev_ok))
    lin_ok = True
    for b in range(2, 7):
        for images in itertools.permutations(range(b)):
            sigma = Permutation(images)
            if phi_integral(b, sigma, SUM) != phi_integral_closed(b, sigma):
                lin_ok = False
    results.append(CheckResult("sum integral equals closed form (exhaustive b<=6)", lin_ok))
    sum_ok = True
    for b in (2, 3, 4, 5):
        sigmas = [Permutation.identity(b)]
        for _ in range(2):
            images = list(range(b))
            rng.shuffle(images)
            sigmas.append(Permutation(tuple(images)))
        for sigma in sigmas:
            for j in (1, 2):
                grid = b**j
                for kind, corr in (
                    (CROSS_SUM, formulas.product_sum_correction(b, j)),
                    (CROSS_SUM_UP, formulas.shifted_product_sum_correction(b, j)),
                    (CROSS_SUM_DOWN, formulas.shifted_product_sum_correction(b, j)),
                ):
                    poly = phi_as_piecewise(b, sigma, kind)
                    left = sum(poly.evaluate(Fraction(k % grid, grid)) for k in range(1, grid + 1))
                    right = grid * (poly.integral() + corr / 2)
                    if left != right:
                        sum_ok = False
    results.append(CheckResult("grid-sum corrections for product aggregates", sum_ok))
    return results


def _direct_aggregate(b: int, sigma: Permutation, kind: PhiKind, x: Fraction) -> Fraction:
    bar = conjugate(sigma)
    if kind.tag == "sum":
        return sum((phi(b, h, sigma, x) for h in range(b)), Fraction(0))
    if kind.tag == "square_sum":
        return sum((phi(b, h, sigma, x) ** 2 for h in range(b)), Fraction(0))
    if kind.tag == "cross_sum":
        return sum((phi(b, h, sigma, x) * phi(b, h, bar, x) for h in range(b)), Fraction(0))
    if kind.tag == "cross_sum_up":
        return sum((phi(b, h + 1, sigma, x) * phi(b, h, bar, x) for h in range(b - 1)), Fraction(0))
    if kind.tag == "cross_sum_down":
        return sum((phi(b, h, sigma, x) * phi(b, h + 1, bar, x) for h in range(b - 1)), Fraction(0))
    return phi(b, kind.h, sigma, x)


def suite_local(quick: bool = False, threads: int = 1) -> list[CheckResult]:
    """Digit formula for the local discrepancy against direct counting."""
    results = []
    grids_ok = True
    configs = [(2, 1), (2, 2), (3, 1), (3, 2)] + ([] if quick else [(2, 3), (3, 3)])
    for b, n in configs:
        for sigma in (Permutation.identity(b), reversal(b)):
            for word in itertools.product("sc", repeat=n):
                pattern = SigmaPattern(sigma, "".join(word))
                ps = pointset.scrambled_hammersley(pattern)
                grid = b**n
                for lam in range(1, grid + 1):
                    for big_n in range(1, grid + 1):
                        direct = discrepancy.local_discrepancy(
                            ps, Fraction(lam, grid), Fraction(big_n, grid)
                        )
                        if direct != discrepancy.faure_local_discrepancy(pattern, lam, big_n):
                            grids_ok = False
    results.append(CheckResult("digit formula equals box counting on full grids", grids_ok))
    rng = random.Random(271828)
    off_ok = True
    sym_ok = True
    for b, n in [(2, 2), (3, 2)]:
        pattern = SigmaPattern(Permutation.identity(b), "s" * n)
        ps = pointset.scrambled_hammersley(pattern)
        star = pointset.scrambled_hammersley(SigmaPattern(Permutation.identity(b), "c" * n))
        sym = pointset.symmetrized(pattern)
        grid = b**n
        for _ in range(100 if quick else 200):
            x = Fraction(rng.randrange(1, 997), 997)
            y = Fraction(rng.randrange(1, 997), 997)
            xg = discrepancy.grid_round(x, b, n)
            yg = discrepancy.grid_round(y, b, n)
            lhs = discrepancy.local_discrepancy(ps, x, y)
            rhs = discrepancy.local_discrepancy(ps, xg, yg) + grid * (xg * yg - x * y)
            if lhs != rhs:
                off_ok = False
            total = discrepancy.local_discrepancy(sym, x, y)
            split = discrepancy.local_discrepancy(ps, x, y) + discrepancy.local_discrepancy(star, x, y)
            if total != split:
                sym_ok = False
    results.append(CheckResult("off-grid rounding identity", off_ok))
    results.append(CheckResult("symmetrized local discrepancy splits", sym_ok))
    warnock_ok = (
        discrepancy.warnock_l2_sq(
            pointset.scrambled_hammersley(SigmaPattern(Permutation.identity(2), "s"))
        )
        == Fraction(91, 144)
    )
    results.append(CheckResult("Warnock anchor 91/144", warnock_ok))
    return results


SUITES = {
    "table": suite_table,
    "symmetrized": suite_symmetrized,
    "scrambled": suite_scrambled,
    "constants": suite_constants,
    "phi": suite_phi,
    "local": suite_local,
}


def run_suites(names: list[str], quick: bool = False, threads: int = 1) -> tuple[list[CheckResult], bool]:
    if names == ["all"]:
        names = list(SUITES)
    results: list[CheckResult] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        results.extend(SUITES[name](quick=quick, threads=threads))
    return results, all(r.ok for r in results)
