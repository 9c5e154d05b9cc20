"""Compare the compiled and pure-Python grid kernels on one (D, Q) grid.

    python3 benchmarks/bench_kernels.py --max-alpha-den 120 --max-q 24
"""
import argparse
import time

import numpy as np

from legendre_cf import kernels
from legendre_cf.harness import DEFAULT_C_VALUES, grid_alphas, grid_table


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-alpha-den", type=int, default=120)
    ap.add_argument("--max-q", type=int, default=24)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    alphas, rows = grid_alphas(args.max_alpha_den), grid_table(args.max_q)
    cvals = [(c.numerator, c.denominator) for c in DEFAULT_C_VALUES]
    pairs = len(alphas) * len(rows)
    print(f"grid: {len(alphas)} alphas x {len(rows)} fractions = {pairs} pairs")

    results = {}
    for backend in ("python", "cython"):
        if backend == "cython" and not kernels.compiled_available():
            print("cython: extension not built, skipped")
            continue
        secs, masks = timed(lambda: kernels.scan_block(alphas, rows, cvals, backend=backend), args.repeat)
        results[backend] = (secs, masks)
        print(f"{backend:>7}: {secs:8.3f} s  {pairs / secs / 1e6:8.3f} Mpairs/s")

    if len(results) == 2:
        (py, a), (cy, b) = results["python"], results["cython"]
        print(f"speedup: {py / cy:.1f}x  masks identical: {np.array_equal(a, b)}")


if __name__ == "__main__":
    main()
