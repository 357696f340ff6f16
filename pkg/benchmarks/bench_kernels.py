#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback.

Workloads are bulk axiom scans over stacks of operation tables: the
exhaustive three-element stack plus random stacks on four and five
elements. The numba path pays JIT compilation once (excluded by a
warm-up pass); reported numbers are best-of-N wall times.

    python benchmarks/bench_kernels.py [--repeats 5] [--count4 100000] [--count5 30000]
"""

import argparse
import time

from travelgroupoids.kernels import _numba, _numpy, all_tables, random_tables

MASKS = ("t1_mask", "t2_mask", "t3_mask", "t4_mask", "t5_mask", "r1_mask", "r2_mask")


def best_time(fn, tables, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(tables)
        best = min(best, time.perf_counter() - start)
    return best


def run(workloads, repeats: int) -> None:
    header = f"{'workload':<24} {'kernel':<8} {'numba':>10} {'numpy':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, tables in workloads:
        for mask in MASKS:
            jit = getattr(_numba, mask)
            vec = getattr(_numpy, mask)
            jit(tables[:2])  # warm-up: compile outside the timed region
            t_jit = best_time(jit, tables, repeats)
            t_vec = best_time(vec, tables, repeats)
            if not (getattr(_numba, mask)(tables) == getattr(_numpy, mask)(tables)).all():
                raise AssertionError(f"backends disagree on {label}/{mask}")
            print(
                f"{label:<24} {mask:<8} {t_jit * 1e3:>8.2f}ms {t_vec * 1e3:>8.2f}ms "
                f"{t_vec / t_jit:>7.1f}x"
            )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--count4", type=int, default=100_000)
    parser.add_argument("--count5", type=int, default=30_000)
    args = parser.parse_args()

    workloads = [
        ("all tables, n=3", all_tables(3)),
        (f"random n=4 x{args.count4}", random_tables(4, args.count4, seed=1)),
        (f"random n=5 x{args.count5}", random_tables(5, args.count5, seed=2)),
    ]
    run(workloads, args.repeats)


if __name__ == "__main__":
    main()
