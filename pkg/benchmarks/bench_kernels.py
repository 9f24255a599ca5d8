#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs the hot closure and witness-scan kernels over rings of increasing order
and reports per-call timings for both backends.  The first numba call incurs
JIT compilation (cached to disk afterwards); a warmup call is excluded from
the timings.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from finring._kernels import numba_impl, numpy_impl
from finring.rings import make_cyclic_ring, make_matrix_ring, make_product_ring


def bench(fn, args, repeat: int) -> float:
    fn(*args)  # warmup (JIT compile on the numba path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def ring_cases():
    f2 = make_cyclic_ring(2)
    f3 = make_cyclic_ring(3)
    yield "Mat(Z(2),2) order 16", make_matrix_ring(f2, 2)
    yield "Mat(Z(3),2) order 81", make_matrix_ring(f3, 2)
    yield "Z(2)^7 order 128", make_product_ring([f2] * 7)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    if numba_impl is None:
        print("numba backend unavailable; nothing to compare")
        return

    rng = np.random.default_rng(7)
    print(f"{'case':<44} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for label, T in ring_cases():
        mask = rng.random(T.order) < 0.15
        scope = np.arange(T.order, dtype=np.int64)
        pmask = np.zeros(T.order, dtype=np.bool_)
        pmask[T.zero] = True
        cases = [
            ("subring_close", (T.add, T.neg, T.mul, T.zero, mask)),
            ("ideal_close(left)", (T.add, T.neg, T.mul, T.zero, mask, scope, True, False)),
            ("not_prime_witness", (T.mul, scope, pmask)),
            ("sandwich_pairs", (T.mul, pmask)),
        ]
        for name, call_args in cases:
            t_np = bench(getattr(numpy_impl, name.split("(")[0]), call_args, args.repeat)
            t_nb = bench(getattr(numba_impl, name.split("(")[0]), call_args, args.repeat)
            ratio = t_np / t_nb if t_nb > 0 else float("inf")
            print(f"{label + ' ' + name:<44} {t_np * 1e6:>10.1f}us {t_nb * 1e6:>10.1f}us {ratio:>8.1f}x")


if __name__ == "__main__":
    main()
