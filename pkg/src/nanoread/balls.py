"""Single-deletion error balls, run statistics, and confusability."""

from __future__ import annotations

from typing import Sequence

from .core import LengthMismatchError, read_vector

Seq = tuple[int, ...]


def runs(u: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs of u as (symbol, length) pairs."""
    out: list[tuple[int, int]] = []
    for s in u:
        if out and out[-1][0] == s:
            out[-1] = (s, out[-1][1] + 1)
        else:
            out.append((s, 1))
    return out


def rho_geq(u: Sequence[int], a: int) -> int:
    """Number of maximal runs of length >= a."""
    if a < 1:
        raise ValueError("run-length threshold must be >= 1")
    return sum(1 for _, length in runs(u) if length >= a)


def deletion_ball(u: Sequence[int]) -> set[Seq]:
    """All distinct words reachable from u by deleting one symbol."""
    if len(u) < 1:
        raise ValueError("cannot delete from an empty word")
    u = tuple(u)
    return {u[:i] + u[i + 1 :] for i in range(len(u))}


def sticky_ball(u: Sequence[int], r: int) -> set[Seq]:
    """One deletion from each maximal run of length >= r.

    For r=1 this is the full deletion ball; its size always equals the
    number of runs of length >= r.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    u = tuple(u)
    out: set[Seq] = set()
    pos = 0
    for _, length in runs(u):
        if length >= r:
            out.add(u[:pos] + u[pos + 1 :])
        pos += length
    return out


def restricted_ball(u: Sequence[int], k: int) -> set[Seq]:
    """Deletions permitted only at positions holding symbol 0 or k."""
    u = tuple(u)
    return {u[:i] + u[i + 1 :] for i, s in enumerate(u) if s == 0 or s == k}


def sticky_read_images(x: Sequence[int], window: int) -> set[Seq]:
    """Read vectors of the words reachable by one in-run deletion.

    Pads x with window-1 zeros on both sides, applies every deletion
    inside a run of length >= window, and collects the read vectors of
    the words y whose padded form arises this way.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    pad = (0,) * (window - 1)
    padded = pad + tuple(x) + pad
    out: set[Seq] = set()
    for py in sticky_ball(padded, window):
        if window > 1 and (py[: window - 1] != pad or py[-(window - 1) :] != pad):
            continue
        y = py[window - 1 : len(py) - (window - 1)] if window > 1 else py
        out.add(read_vector(y, window))
    return out


def confusable(u: Sequence[int], v: Sequence[int]) -> bool:
    """Whether u and v differ exactly in a swapped two-symbol alternation.

    True iff u = a c b and v = a c' b where |c| >= 2 and {c, c'} are the
    two alternations of some pair of distinct symbols.  Linear scan: the
    differing positions must be contiguous and alternate in both words.
    """
    if len(u) != len(v):
        raise LengthMismatchError(f"length mismatch: {len(u)} vs {len(v)}")
    diffs = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diffs) < 2:
        return False
    i, j = diffs[0], diffs[-1]
    if len(diffs) != j - i + 1:
        return False
    alpha, beta = u[i], v[i]
    for k in range(i, j + 1):
        even = (k - i) % 2 == 0
        if u[k] != (alpha if even else beta):
            return False
        if v[k] != (beta if even else alpha):
            return False
    return True
