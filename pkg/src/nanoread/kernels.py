"""Batch run-statistics kernels over packed word enumerations.

Words of length n are packed into uint64 values (bit i holds position
i).  The hot loop counts, for every word in a batch, the number of
maximal runs of length >= a; the bounds module reduces the resulting
histograms into exact rationals.

The numba path is used by default; set NANOREAD_NO_NUMBA=1 to force the
pure-numpy fallback (see benchmarks/bench_kernels.py for a comparison).
"""

from __future__ import annotations

import os

import numpy as np

_CHUNK = 1 << 18

USE_NUMBA = os.environ.get("NANOREAD_NO_NUMBA", "").lower() not in ("1", "true", "yes")
if USE_NUMBA:
    try:
        from numba import njit, prange
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

if USE_NUMBA:

    @njit(parallel=True, cache=True)
    def _rho_geq_batch_numba(words, n, a, out):
        for k in prange(words.shape[0]):
            w = words[k]
            prev = w & 1
            cur = 1
            cnt = 1 if a == 1 else 0
            for i in range(1, n):
                b = (w >> i) & 1
                if b == prev:
                    cur += 1
                else:
                    cur = 1
                    prev = b
                if cur == a:
                    cnt += 1
            out[k] = cnt


def _rho_geq_batch_numpy(words, n, a, out):
    prev = (words & 1).astype(np.int64)
    cur = np.ones(words.shape[0], dtype=np.int64)
    cnt = np.full(words.shape[0], 1 if a == 1 else 0, dtype=np.int64)
    for i in range(1, n):
        b = ((words >> np.uint64(i)) & np.uint64(1)).astype(np.int64)
        same = b == prev
        cur = np.where(same, cur + 1, 1)
        cnt += cur == a
        prev = b
    out[:] = cnt


def rho_geq_batch(words: np.ndarray, n: int, a: int) -> np.ndarray:
    """Per-word count of maximal runs of length >= a.

    words: uint64 array of packed length-n words; a >= 1.
    """
    if a < 1:
        raise ValueError("run-length threshold must be >= 1")
    if n < 1:
        raise ValueError("word length must be >= 1")
    words = np.ascontiguousarray(words, dtype=np.uint64)
    out = np.empty(words.shape[0], dtype=np.int64)
    if USE_NUMBA:
        _rho_geq_batch_numba(words, n, a, out)
    else:
        _rho_geq_batch_numpy(words, n, a, out)
    return out


def rho_geq_histogram(n: int, a: int) -> np.ndarray:
    """Histogram of rho_geq over all 2^n words of length n.

    Entry r is the number of words with exactly r maximal runs of
    length >= a.  Enumeration is chunked to bound memory.
    """
    if n > 28:
        raise ValueError("full enumeration guarded at n <= 28")
    max_rho = n // a + 1
    hist = np.zeros(max_rho + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        words = np.arange(start, stop, dtype=np.uint64)
        rho = rho_geq_batch(words, n, a)
        hist += np.bincount(rho, minlength=max_rho + 1)
    return hist
