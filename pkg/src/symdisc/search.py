"""Exhaustive minimization of the leading-term constant over the reduced class.

Every permutation commuting with the digit reversal whose lower half maps
into itself is determined by a lower-half assignment; there are floor(b/2)!
of them and the minimum over this class is the global minimum over all
commuting permutations (complementary swaps preserve the constant). The
search scans all of them with exact integer comparisons.

Only the integer double sum of the closed form depends on the permutation,
so the scan tracks that integer. Permutations are enumerated in minimal-
change order (one transposition per step); a transposition touches four
positions of the full permutation and therefore O(b) of the b^2 double-sum
terms, which the scan updates incrementally. A full recomputation every
2^14 steps and at every new minimum guards the incremental state.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from symdisc.formulas import leading_constant_from_c
from symdisc.permutations import PartialPermutation, extend_partial, parse_cycles
from symdisc.reference import FULL_SEARCH_PRACTICAL_MAX

__all__ = [
    "SearchBudgetError",
    "SearchResult",
    "VerifyRowReport",
    "search_min_c",
    "verify_table_row",
    "observed_max_c",
]

PROGRESS_EVERY = 1_000_000
_GUARD_EVERY = 1 << 14


class SearchBudgetError(RuntimeError):
    """Full search refused: the permutation count exceeds the opt-in budget."""


@dataclass(frozen=True)
class SearchResult:
    b: int
    min_c: Fraction
    minimizers: tuple[PartialPermutation, ...]
    g: int
    scanned: int
    elapsed: float
    mode: str


def _weight_matrix(b: int) -> list[list[int]]:
    """Twice the double-sum weight, so everything stays integral."""
    return [
        [b * (max(k1, k2) + max(k1 + k2, b - 1)) - 2 * k1 * k1 - 2 * k1 for k2 in range(b)]
        for k1 in range(b)
    ]


def _objective(sig: list[int], w2: list[list[int]]) -> int:
    """Twice the double sum for a full permutation, from scratch."""
    total = 0
    for k1, row in enumerate(w2):
        s1 = sig[k1]
        for k2, w in enumerate(row):
            s2 = sig[k2]
            total += (s1 if s1 >= s2 else s2) * w
    return total


def _extend_images(b: int, lower: list[int]) -> list[int]:
    m = b // 2
    sig = lower + [0] * (b - m)
    if b % 2:
        sig[m] = m
    for k in range(m):
        sig[b - 1 - k] = b - 1 - sig[k]
    return sig


def c_from_objective(b: int, objective2: int) -> Fraction:
    """Map twice the double sum to the exact constant."""
    poly = Fraction(16 - 12 * b - 111 * b * b + 228 * b**3 - 112 * b**4, 72 * b * b)
    parity = Fraction(0) if b % 2 == 0 else Fraction(-1, 8 * b * b)
    return poly + parity + Fraction(2 * objective2, b**3)


def _scan_block(b: int, first_image: int | None, progress: bool = False) -> tuple[int, list[tuple[int, ...]], int]:
    """Scan all lower-half assignments, optionally with position 0 pinned.

    Returns (best objective, list of best lower halves, count scanned).
    Enumeration is minimal-change: each step transposes two lower-half
    positions (and, implicitly, their mirror positions in the upper half).
    """
    m = b // 2
    w2 = _weight_matrix(b)
    ws = [[w2[i][j] + w2[j][i] for j in range(b)] for i in range(b)]
    if first_image is None:
        lower = list(range(m))
        lo = 0
    else:
        lower = [first_image] + [v for v in range(m) if v != first_image]
        lo = 1  # permute positions lo..m-1 only
    sig = _extend_images(b, lower)
    current = _objective(sig, w2)
    best = current
    best_parts: list[tuple[int, ...]] = [tuple(sig[:m])]
    scanned = 1
    span = m - lo
    counters = [0] * span
    i = 0
    steps = 0
    while i < span:
        if counters[i] < i:
            pi = lo + (0 if i % 2 == 0 else counters[i])
            pj = lo + i
            qi, qj = b - 1 - pi, b - 1 - pj
            positions = (pi, pj, qi, qj)
            old = (sig[pi], sig[pj], sig[qi], sig[qj])
            new = (sig[pj], sig[pi], sig[qj], sig[qi])
            delta = 0
            for q in range(4):
                p = positions[q]
                o = old[q]
                nv = new[q]
                delta += (nv - o) * w2[p][p]
                ws_p = ws[p]
                for k in range(b):
                    if k == pi or k == pj or k == qi or k == qj:
                        continue
                    v = sig[k]
                    mo = o if o > v else v
                    mn = nv if nv > v else v
                    if mn != mo:
                        delta += (mn - mo) * ws_p[k]
            for q in range(4):
                oq, nq = old[q], new[q]
                pq = positions[q]
                for r in range(q + 1, 4):
                    mo = oq if oq > old[r] else old[r]
                    mn = nq if nq > new[r] else new[r]
                    if mn != mo:
                        delta += (mn - mo) * ws[pq][positions[r]]
            sig[pi], sig[pj] = sig[pj], sig[pi]
            sig[qi], sig[qj] = sig[qj], sig[qi]
            current += delta
            scanned += 1
            steps += 1
            if steps % _GUARD_EVERY == 0 and current != _objective(sig, w2):
                raise AssertionError("incremental objective drifted from recomputation")
            if current <= best:
                if current < best:
                    if current != _objective(sig, w2):
                        raise AssertionError("incremental objective drifted at a new minimum")
                    best = current
                    best_parts = [tuple(sig[:m])]
                else:
                    best_parts.append(tuple(sig[:m]))
            if progress and scanned % PROGRESS_EVERY == 0:
                print(f"scanned {scanned} permutations", file=sys.stderr)
            counters[i] += 1
            i = 0
        else:
            counters[i] = 0
            i += 1
    return best, best_parts, scanned


def search_min_c(
    b: int,
    mode: str = "full",
    threads: int = 1,
    partial: PartialPermutation | None = None,
    samples: int = 1000,
    seed: int = 0,
    allow_long: bool = False,
    progress: bool = False,
) -> SearchResult:
    """Minimize the leading-term constant over the reduced class.

    full:   exact minimum over all floor(b/2)! lower-half assignments, all
            minimizers collected (lexicographically sorted). For b above
            FULL_SEARCH_PRACTICAL_MAX an explicit allow_long=True is required.
    verify: evaluate only the provided ``partial``.
    sample: evaluate ``samples`` random assignments drawn with ``seed``.

    The result is deterministic and identical across thread counts: workers
    partition the space by the image of digit 0 and the merge compares exact
    values only.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    start = time.perf_counter()
    m = b // 2

    if mode == "verify":
        if partial is None:
            raise ValueError("verify mode needs a partial permutation")
        if partial.b != b:
            raise ValueError(f"partial permutation has base {partial.b}, expected {b}")
        w2 = _weight_matrix(b)
        obj = _objective(_extend_images(b, list(partial.images)), w2)
        return SearchResult(
            b, c_from_objective(b, obj), (partial,), 1, 1, time.perf_counter() - start, "verify"
        )

    if mode == "sample":
        import random

        rng = random.Random(seed)
        w2 = _weight_matrix(b)
        best: int | None = None
        best_parts: list[tuple[int, ...]] = []
        for _ in range(samples):
            lower = list(range(m))
            rng.shuffle(lower)
            obj = _objective(_extend_images(b, lower), w2)
            if best is None or obj < best:
                best = obj
                best_parts = [tuple(lower)]
            elif obj == best and tuple(lower) not in best_parts:
                best_parts.append(tuple(lower))
        minimizers = tuple(PartialPermutation(b, p) for p in sorted(best_parts))
        return SearchResult(
            b,
            c_from_objective(b, best),
            minimizers,
            len(minimizers),
            samples,
            time.perf_counter() - start,
            "sample",
        )

    if mode != "full":
        raise ValueError(f"unknown mode {mode!r}")

    total = 1
    for k in range(2, m + 1):
        total *= k
    if b > FULL_SEARCH_PRACTICAL_MAX and not allow_long:
        raise SearchBudgetError(
            f"full search at base {b} scans {total} permutations; "
            f"pass allow_long=True (CLI: --allow-long) to run it anyway"
        )

    if threads > 1 and m > 2:
        blocks = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_scan_block, b, v) for v in range(m)]
            blocks = [f.result() for f in futures]
        best = min(block[0] for block in blocks)
        parts = [p for block in blocks if block[0] == best for p in block[1]]
        scanned = sum(block[2] for block in blocks)
    else:
        best, parts, scanned = _scan_block(b, None, progress=progress)

    if scanned != total:
        raise AssertionError(f"scanned {scanned} of {total} permutations")
    minimizers = tuple(PartialPermutation(b, p) for p in sorted(set(parts)))
    if len(minimizers) != len(parts):
        raise AssertionError("duplicate minimizers collected")
    return SearchResult(
        b,
        c_from_objective(b, best),
        minimizers,
        len(minimizers),
        scanned,
        time.perf_counter() - start,
        "full",
    )


def observed_max_c(b: int) -> tuple[Fraction, tuple[PartialPermutation, ...]]:
    """Maximum of the constant over the reduced class, with all maximizers.

    Reported as data only (the interesting empirical pattern is which
    permutations attain it); brute force, intended for small b.
    """
    w2 = _weight_matrix(b)
    import itertools

    m = b // 2
    best: int | None = None
    parts: list[tuple[int, ...]] = []
    for images in itertools.permutations(range(m)):
        obj = _objective(_extend_images(b, list(images)), w2)
        if best is None or obj > best:
            best = obj
            parts = [images]
        elif obj == best:
            parts.append(images)
    return c_from_objective(b, best), tuple(PartialPermutation(b, p) for p in sorted(parts))


@dataclass(frozen=True)
class VerifyRowReport:
    """Per-field outcome of checking one table row."""

    b: int
    cycles: str
    mode: str
    c_computed: Fraction
    c_claimed: Fraction
    c_ok: bool
    leading_computed: str | None = None
    leading_claimed: str | None = None
    leading_ok: bool | None = None
    min_c: Fraction | None = None
    min_ok: bool | None = None
    g_computed: int | None = None
    g_claimed: int | None = None
    g_ok: bool | None = None

    @property
    def passed(self) -> bool:
        checks = [self.c_ok, self.leading_ok, self.min_ok, self.g_ok]
        return all(ok for ok in checks if ok is not None)


def verify_table_row(
    b: int,
    cycles: str,
    claimed_c: Fraction,
    claimed_g: int,
    mode: str = "verify",
    claimed_leading: str | None = None,
    digits: int = 6,
    threads: int = 1,
    allow_long: bool = False,
) -> VerifyRowReport:
    """Check that the permutation given in cycle notation attains the claimed
    constant; in full mode additionally check the minimum and the number of
    minimizers."""
    partial = parse_cycles(cycles, b)
    verified = search_min_c(b, mode="verify", partial=partial)
    c = verified.min_c
    leading_computed = None
    leading_ok = None
    if claimed_leading is not None:
        leading_computed = leading_constant_from_c(c, b, digits)
        leading_ok = leading_computed == claimed_leading
    if mode == "full":
        full = search_min_c(b, mode="full", threads=threads, allow_long=allow_long)
        return VerifyRowReport(
            b,
            cycles,
            mode,
            c_computed=c,
            c_claimed=claimed_c,
            c_ok=c == claimed_c,
            leading_computed=leading_computed,
            leading_claimed=claimed_leading,
            leading_ok=leading_ok,
            min_c=full.min_c,
            min_ok=full.min_c == claimed_c and partial in full.minimizers,
            g_computed=full.g,
            g_claimed=claimed_g,
            g_ok=full.g == claimed_g,
        )
    return VerifyRowReport(
        b,
        cycles,
        mode,
        c_computed=c,
        c_claimed=claimed_c,
        c_ok=c == claimed_c,
        leading_computed=leading_computed,
        leading_claimed=claimed_leading,
        leading_ok=leading_ok,
        g_claimed=claimed_g,
    )
