#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Two workloads, matching the hot paths of the acceptance suite:
  * sweep  - exhaustive Z/n origin-independence sweep (all 267 weight
             vectors of length <= 4, |w| <= 3) for the given n values
  * circle - torus-averaged circle sampling for a (2, 3, 5) system,
             the inner loop of extension_check

Usage: python benchmarks/bench_kernels.py [--n 12] [--samples 200000]
"""

import argparse
import time

import numpy as np

from torsorkit._kernels import available_backends
from torsorkit.fibration import _pack_system, build_synthetic_model
from torsorkit.torsor import iter_weight_vectors


def time_sweep(kernel, n_values, vectors):
    start = time.perf_counter()
    cases = 0
    for n in n_values:
        for w in vectors:
            c, f, _ = kernel.cyclic_origin_sweep(n, w)
            assert f == 0
            cases += c
    return time.perf_counter() - start, cases


def time_circle(kernel, args_tuple, ts):
    start = time.perf_counter()
    out = kernel.torus_average_reps(*args_tuple, ts)
    elapsed = time.perf_counter() - start
    return elapsed, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=12, help="largest cyclic modulus")
    parser.add_argument("--samples", type=int, default=200_000,
                        help="circle sample count")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")

    vectors = iter_weight_vectors(4, 3)
    n_values = range(1, args.n + 1)
    print(f"\nsweep workload: n = 1..{args.n}, {len(vectors)} weight vectors")
    sweep_times = {}
    for name in sorted(backends):
        elapsed, cases = time_sweep(backends[name], n_values, vectors)
        sweep_times[name] = elapsed
        print(f"  {name:<8} {elapsed:8.3f} s   ({cases / elapsed / 1e6:8.1f} M cases/s)")

    sysm = build_synthetic_model((2, 3, 5), seed=0)
    packed = _pack_system(sysm)
    ts = 0.1 * np.exp(2j * np.pi * np.arange(args.samples) / args.samples)
    kernel_args = (*packed, complex(sysm.family.tau0), 0j)
    print(f"\ncircle workload: {args.samples} samples of a (2, 3, 5) system")
    circle_times = {}
    reference = None
    for name in sorted(backends):
        elapsed, out = time_circle(backends[name], kernel_args, ts)
        circle_times[name] = elapsed
        if reference is None:
            reference = out
        else:
            drift = float(np.max(np.abs(out - reference)))
            assert drift < 1e-10, f"backends disagree by {drift}"
        print(f"  {name:<8} {elapsed:8.3f} s   ({args.samples / elapsed / 1e3:8.1f} k samples/s)")

    if {"cython", "numpy"} <= set(backends):
        print("\nspeedup (cython vs numpy):")
        print(f"  sweep   {sweep_times['numpy'] / sweep_times['cython']:6.2f}x")
        print(f"  circle  {circle_times['numpy'] / circle_times['cython']:6.2f}x")


if __name__ == "__main__":
    main()
