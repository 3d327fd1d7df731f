#!/usr/bin/env python3
"""Compare the pure-Python and compiled transform kernels.

Runs the full axis-pass transform on random vectors for a range of
(p, n) sizes, checks both kernels agree, and reports per-call times.

Usage:
    python benchmarks/bench_transform.py [--large]
"""

import argparse
import random
import time

from rmfsym import _kernels
from rmfsym.transform import _basic_flat

try:
    from rmfsym import _kernels_cy
except ImportError:
    _kernels_cy = None

CASES = [(3, 3), (4, 3), (3, 6), (2, 12), (4, 6), (3, 8), (5, 6)]
LARGE_CASES = [(4, 7), (3, 10), (2, 16)]


def time_kernel(fn, values, p, n, r1, budget=1.0):
    fn(values, p, n, r1)  # warm up, also JIT-free sanity run
    start = time.perf_counter()
    once = None
    calls = 0
    while time.perf_counter() - start < budget:
        t0 = time.perf_counter()
        fn(values, p, n, r1)
        dt = time.perf_counter() - t0
        once = dt if once is None else min(once, dt)
        calls += 1
        if calls >= 50:
            break
    return once


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--large", action="store_true", help="add the biggest cases (slower)"
    )
    args = parser.parse_args()

    cases = CASES + (LARGE_CASES if args.large else [])
    rng = random.Random(1)

    if _kernels_cy is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    header = f"{'p':>3} {'n':>3} {'size':>8} {'python':>12} {'cython':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for p, n in cases:
        size = p**n
        values = [rng.randrange(p) for _ in range(size)]
        r1 = _basic_flat(p)
        t_py = time_kernel(_kernels.rmf_apply, values, p, n, r1)
        if _kernels_cy is not None:
            t_cy = time_kernel(_kernels_cy.rmf_apply, values, p, n, r1)
            assert _kernels.rmf_apply(values, p, n, r1) == _kernels_cy.rmf_apply(
                values, p, n, r1
            ), f"kernel mismatch at p={p}, n={n}"
            print(
                f"{p:>3} {n:>3} {size:>8} {t_py * 1e6:>10.1f}us "
                f"{t_cy * 1e6:>10.1f}us {t_py / t_cy:>7.1f}x"
            )
        else:
            print(f"{p:>3} {n:>3} {size:>8} {t_py * 1e6:>10.1f}us {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
