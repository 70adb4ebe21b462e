#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Runs the raw matrix primitives on synthetic batches, then a real census
workload, once per backend, and prints a comparison table.

    python3 benchmarks/bench_kernels.py [--census-n 3] [--census-q 2]
"""

import argparse
import random
import time

from bedard_pieces.flagbrute import GF, kernels, z_census
from bedard_pieces.flagbrute.flags import flag_PQ, pos_flags
from bedard_pieces.flagbrute.zvariety import gl_elements


def bench_rref(repeat=6000):
    field = GF(3)
    rng = random.Random(1)
    mats = [tuple(tuple(rng.randrange(3) for _ in range(6)) for _ in range(5))
            for _ in range(repeat)]
    t0 = time.perf_counter()
    for m in mats:
        kernels.rref(m, field)
    return time.perf_counter() - t0


def bench_mat_mul(repeat=20000):
    field = GF(5)
    rng = random.Random(2)
    pairs = [(tuple(tuple(rng.randrange(5) for _ in range(3))
                    for _ in range(3)),
              tuple(tuple(rng.randrange(5) for _ in range(3))
                    for _ in range(3)))
             for _ in range(repeat)]
    t0 = time.perf_counter()
    for a, b in pairs:
        kernels.mat_mul(a, b, field)
    return time.perf_counter() - t0


def bench_mat_inv(repeat=6000):
    field = GF(4)
    rng = random.Random(3)
    mats = [tuple(tuple(rng.randrange(4) for _ in range(4)) for _ in range(4))
            for _ in range(repeat)]
    t0 = time.perf_counter()
    for m in mats:
        kernels.mat_inv(m, field)
    return time.perf_counter() - t0


def bench_census(n, q):
    # memoized flag calculus would hide the kernels on a second run
    pos_flags.cache_clear()
    flag_PQ.cache_clear()
    t0 = time.perf_counter()
    z_census(n, q, frozenset({0}))
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--census-n", type=int, default=3)
    parser.add_argument("--census-q", type=int, default=2)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; showing pure timings only")

    # group enumeration is cached; warm it so both backends share the work
    gl_elements(GF(args.census_q), args.census_n)

    workloads = [
        ("rref 5x6 / F_3 (6k)", bench_rref),
        ("mat_mul 3x3 / F_5 (20k)", bench_mat_mul),
        ("mat_inv 4x4 / F_4 (6k)", bench_mat_inv),
        (f"z_census n={args.census_n} q={args.census_q} J={{0}}",
         lambda: bench_census(args.census_n, args.census_q)),
    ]

    original = kernels.get_backend()
    results = {}
    try:
        for name in backends:
            kernels.set_backend(name)
            results[name] = [(label, fn()) for label, fn in workloads]
    finally:
        kernels.set_backend(original)

    width = max(len(label) for label, _ in workloads)
    header = f"{'workload':<{width}}  " + "".join(
        f"{name:>10}" for name in backends)
    two = "pure" in results and "cython" in results
    if two:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for i, (label, _) in enumerate(workloads):
        times = [results[name][i][1] for name in backends]
        line = f"{label:<{width}}  " + "".join(f"{t:>9.3f}s" for t in times)
        if two and results["cython"][i][1] > 0:
            ratio = results["pure"][i][1] / results["cython"][i][1]
            line += f"{ratio:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
