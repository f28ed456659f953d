#!/usr/bin/env python3
"""Benchmark the compiled direct-sum kernels against the numpy FFT
fallback across dimensions.

Usage: python benchmarks/bench_kernels.py [--repeats 200]

The compiled backend evaluates the O(n^2) defining sums; the fallback is
O(n log n) via FFT. Expect the compiled path to win at small dimensions
(no transform overhead) and the FFT path to take over as n grows.
"""

import argparse
import time

import numpy as np

from holoscene import backends, hrr


def time_op(fn, x, y, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(x, y)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--dims", type=int, nargs="*", default=[16, 64, 256, 512, 2048, 8192])
    args = parser.parse_args()

    names = backends.available()
    print(f"backends: {names} (active default: {backends.current()})")
    header = f"{'dim':>6} {'op':<9}" + "".join(f"{name:>12}" for name in names) + f"{'ratio':>10}"
    print(header)
    print("-" * len(header))

    for dim in args.dims:
        x = hrr.random_vector(1, dim, term="x")
        y = hrr.random_vector(2, dim, term="y")
        for op_name in ("convolve", "correlate"):
            row = f"{dim:>6} {op_name:<9}"
            timings = []
            for name in names:
                module = backends.get(name)
                fn = getattr(module, op_name)
                fn(x, y)  # warm up
                best = time_op(fn, x, y, args.repeats)
                timings.append(best)
                row += f"{best * 1e6:>10.1f}us"
            if len(timings) == 2 and timings[1] > 0:
                row += f"{timings[0] / timings[1]:>10.2f}"
            print(row)

    # agreement check at the benchmarked sizes
    for dim in args.dims:
        x = hrr.random_vector(3, dim, term="x")
        y = hrr.random_vector(4, dim, term="y")
        results = [backends.get(name).convolve(x, y) for name in names]
        for other in results[1:]:
            np.testing.assert_allclose(results[0], other, atol=1e-9)
    print("\nall backends agree within 1e-9 per entry at the benchmarked dims")


if __name__ == "__main__":
    main()
