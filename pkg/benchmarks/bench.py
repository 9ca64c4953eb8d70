#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels.

Times the greedy scanner and the decoder on random words (many short
factors) and on a long Fibonacci word (one factor, the scanner's cheapest
path and the decoder's most periodic input). Run from the repo root:

    python benchmarks/bench.py [--sizes 100000 1000000 10000000]
"""

import argparse
import time

from dscoding import _pykernel, oracle

try:
    from dscoding import _kernel
except ImportError:
    _kernel = None


def best_of(runs, work):
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        work()
        best = min(best, time.perf_counter() - t0)
    return best


def fibonacci_prefix(n):
    k = 1
    while len(oracle.fibonacci_word(k)) < n:
        k += 1
    return oracle.fibonacci_word(k)[:n]


def bench_word(label, word, runs):
    n = len(word)
    print(f"\n{label}, {n:,} letters")
    print(f"  {'kernel':<8} {'scan':>12} {'ns/letter':>10} {'decode':>12} {'ns/letter':>10}")
    rows = [("python", _pykernel)]
    if _kernel is not None:
        rows.insert(0, ("c", _kernel))
    times = {}
    for name, kernel in rows:
        flat = kernel.scan_codes(word)
        t_scan = best_of(runs, lambda k=kernel: k.scan_codes(word))
        t_dec = best_of(runs, lambda k=kernel, f=flat: k.decode_codes(f))
        times[name] = (t_scan, t_dec)
        print(f"  {name:<8} {t_scan * 1e3:>10.2f}ms {t_scan / n * 1e9:>9.1f} "
              f"{t_dec * 1e3:>10.2f}ms {t_dec / n * 1e9:>9.1f}")
    if _kernel is not None:
        s = times["python"][0] / times["c"][0]
        d = times["python"][1] / times["c"][1]
        print(f"  speedup  scan {s:.0f}x, decode {d:.0f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[100_000, 1_000_000, 10_000_000])
    parser.add_argument("--runs", type=int, default=3)
    args = parser.parse_args()

    if _kernel is None:
        print("compiled kernel not built; timing the pure kernel only")

    for n in args.sizes:
        bench_word("random word (seed 1)", oracle.random_word(n, 1), args.runs)
        bench_word("fibonacci prefix", fibonacci_prefix(n), args.runs)


if __name__ == "__main__":
    main()
