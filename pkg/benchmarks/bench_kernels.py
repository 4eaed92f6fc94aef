"""Compare the numba and numpy run-statistics kernels.

Run:  python benchmarks/bench_kernels.py [--n 22] [--a 2]
The numba path warms up once before timing so compilation is excluded.
"""

import argparse
import time

import numpy as np

from nanoread import kernels


def bench(fn, words, n, a, repeats=3):
    out = np.empty(words.shape[0], dtype=np.int64)
    fn(words, n, a, out)  # warm-up / compile
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(words, n, a, out)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=22)
    parser.add_argument("--a", type=int, default=2)
    args = parser.parse_args()

    words = np.arange(1 << args.n, dtype=np.uint64)
    print(f"{words.shape[0]:,} words of length {args.n}, threshold a={args.a}")

    t_np, out_np = bench(kernels._rho_geq_batch_numpy, words, args.n, args.a)
    print(f"numpy : {t_np * 1e3:9.1f} ms")

    if kernels.USE_NUMBA:
        t_nb, out_nb = bench(kernels._rho_geq_batch_numba, words, args.n, args.a)
        print(f"numba : {t_nb * 1e3:9.1f} ms  (speedup {t_np / t_nb:.1f}x)")
        assert np.array_equal(out_np, out_nb), "kernel mismatch"
    else:
        print("numba : disabled (NANOREAD_NO_NUMBA set or numba missing)")


if __name__ == "__main__":
    main()
