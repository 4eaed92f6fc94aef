"""Counting bounds for codes correcting one in-run deletion.

All combinatorial quantities are exact (integers / fractions, computed
from full enumerations via the packed kernels); only the closed-form
redundancy bound uses floating point, since it mixes logs and exp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .kernels import rho_geq_histogram

MAX_SUM_N = 22


class ResourceLimitError(RuntimeError):
    """Requested enumeration exceeds the guarded problem size."""


def redundancy_lower_bound(n: int, window: int) -> float:
    """Closed-form lower bound, in bits, on single-deletion redundancy.

    Defined for window >= 2 and n > 2 * window (the log argument needs
    1 - 2*window/n > 0).  Approaches log2(n) - window + 1 - 1 for large n.
    """
    if window < 2:
        raise ValueError("bound requires window >= 2")
    if n <= 2 * window:
        raise ValueError("bound requires n > 2 * window")
    inner = 2.0 / (1.0 - 2.0 * window / n) + (
        2.0**-window * n * math.exp(-(n - 1) / 2 ** (2 * window + 1))
    )
    return math.log2(n) - window + 1 - math.log2(inner)


def weighted_sum(n: int, window: int) -> Fraction:
    """Exact sphere-packing upper bound on the in-run-deletion code size.

    Sums, over all words y of length n-1, 1/rho_geq(y, window) when
    positive and 1 otherwise.
    """
    if n > MAX_SUM_N:
        raise ResourceLimitError(f"weighted sum guarded at n <= {MAX_SUM_N}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Fraction(1)  # the single empty word has no runs
    hist = rho_geq_histogram(n - 1, window)
    total = Fraction(int(hist[0]))
    for i in range(1, len(hist)):
        if hist[i]:
            total += Fraction(int(hist[i]), i)
    return total


def tail_count(n: int, a: int) -> int:
    """Number of length-n words with rho_geq(., a) below the tail cutoff.

    The cutoff is (n - 2a + 4) / 2^(a+1); the comparison is done in
    integers so the count is exact.
    """
    if n > MAX_SUM_N:
        raise ResourceLimitError(f"tail count guarded at n <= {MAX_SUM_N}")
    hist = rho_geq_histogram(n, a)
    shift = 2 ** (a + 1)
    return int(sum(hist[r] for r in range(len(hist)) if r * shift < n - 2 * a + 4))


def expected_runs(n: int, a: int) -> Fraction:
    """Mean of rho_geq(., a) over uniform length-n words: (n-a+2) / 2^a."""
    if not 1 <= a <= n:
        raise ValueError("need 1 <= a <= n")
    return Fraction(n - a + 2, 2**a)


def packing_chain(n: int, window: int) -> tuple[Fraction, Fraction, float]:
    """Successive upper bounds on the maximum in-run-deletion code size.

    Returns (exact weighted sum, tail-split bound, relaxed closed form);
    each term is at most the next wherever all are defined.
    """
    ws = weighted_sum(n, window)

    hist = rho_geq_histogram(n - 1, window)
    shift = 2 ** (window + 1)
    cutoff_num = n - 2 * window + 3  # threshold times 2^(window+1)
    tail = sum(int(hist[r]) for r in range(len(hist)) if r * shift < cutoff_num)
    t = -((-cutoff_num) // shift)  # ceil of the cutoff
    bulk = sum(int(hist[r]) for r in range(len(hist)) if r >= t)
    split = Fraction(tail) + Fraction(bulk, t) if t >= 1 else Fraction(tail + bulk)

    closed = 2 ** (n - 1) * math.exp(-(n - 1) / 2 ** (2 * window + 1)) + 2 ** (
        n + window
    ) / (n - 2 * window + 3)
    return ws, split, closed


@dataclass(frozen=True)
class BoundReport:
    n: int
    window: int
    lower_bound_bits: float | None
    weighted_sum: Fraction | None
    tail_count: int | None
    expected_runs: Fraction | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "window": self.window,
            "lower_bound_bits": self.lower_bound_bits,
            "weighted_sum": (
                str(self.weighted_sum) if self.weighted_sum is not None else None
            ),
            "weighted_sum_float": (
                float(self.weighted_sum) if self.weighted_sum is not None else None
            ),
            "tail_count": self.tail_count,
            "expected_runs": (
                str(self.expected_runs) if self.expected_runs is not None else None
            ),
        }


def bound_report(n: int, window: int) -> BoundReport:
    """Populate every field that is defined and enumerable at (n, window).

    Fields outside their domain or above the enumeration guard are left
    absent rather than approximated.
    """
    lower = None
    if window >= 2 and n > 2 * window:
        lower = redundancy_lower_bound(n, window)
    ws = None
    if n <= MAX_SUM_N:
        ws = weighted_sum(n, window)
    tail = None
    if 1 <= n - 1 <= MAX_SUM_N:
        tail = tail_count(n - 1, window)
    exp_runs = expected_runs(n, window) if 1 <= window <= n else None
    return BoundReport(
        n=n,
        window=window,
        lower_bound_bits=lower,
        weighted_sum=ws,
        tail_count=tail,
        expected_runs=exp_runs,
    )
