"""Zero-redundancy recovery of a read vector from two noisy copies.

Given two distinct single-deletion corruptions of the same read vector
(window >= 2), the original is pinned down by re-inserting the missing
symbol at the first or last disagreement and keeping the candidate that
is a legitimate read vector; exactly one of them is.
"""

from __future__ import annotations

from typing import Sequence

from .core import LengthMismatchError, is_valid_read_vector


class BothCandidatesValidError(RuntimeError):
    """Both re-insertions were legitimate; inputs cannot share one source."""


class InconsistentReadsError(ValueError):
    """Neither re-insertion is legitimate; the reads have no common source."""


def disagreement_span(u: Sequence[int], v: Sequence[int]) -> tuple[int, int]:
    """First and last 1-based indices where u and v differ."""
    if len(u) != len(v):
        raise LengthMismatchError(f"length mismatch: {len(u)} vs {len(v)}")
    diffs = [i for i in range(len(u)) if u[i] != v[i]]
    if not diffs:
        raise ValueError("sequences are identical")
    return diffs[0] + 1, diffs[-1] + 1


def reconstruct_two(
    first: Sequence[int], second: Sequence[int], window: int, n: int
) -> tuple[int, ...]:
    """Rebuild the read vector both noisy copies were deleted from.

    Both inputs must have length n + window - 2 and be distinct.  The
    two candidates are formed by inserting second's symbol at the first
    disagreement and after the last one; validity arbitrates.
    """
    if window < 2:
        raise ValueError("two-read reconstruction requires window >= 2")
    r1, r2 = tuple(first), tuple(second)
    expect = n + window - 2
    if len(r1) != expect or len(r2) != expect:
        raise LengthMismatchError(
            f"both reads must have length {expect}, got {len(r1)} and {len(r2)}"
        )
    if r1 == r2:
        raise ValueError("reads must be distinct")

    i, j = disagreement_span(r1, r2)
    head = r1[: i - 1] + (r2[i - 1],) + r1[i - 1 :]
    tail = r1[:j] + (r2[j - 1],) + r1[j:]

    if head == tail:
        if is_valid_read_vector(head, window, n):
            return head
        raise InconsistentReadsError("no legitimate read vector explains both reads")

    head_ok = is_valid_read_vector(head, window, n)
    tail_ok = is_valid_read_vector(tail, window, n)
    if head_ok and tail_ok:
        raise BothCandidatesValidError(
            "both candidates are legitimate read vectors"
        )
    if head_ok:
        return head
    if tail_ok:
        return tail
    raise InconsistentReadsError("no legitimate read vector explains both reads")
