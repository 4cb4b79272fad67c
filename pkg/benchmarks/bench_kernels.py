"""Timing comparison of the compiled and pure-Python q-series kernels.

Runs both backends on the same (N, p) inputs, reports per-call times, the
speedup, and the worst disagreement measured against the kernels' own
rounding-noise floor abs_sum * 1e-15 (the two backends accumulate in the
same order, so anything near or below 1 is pure rounding).

Usage: python3 benchmarks/bench_kernels.py [--sizes 50,100,200,400] [--p 6]
"""

import argparse
import time

from olim41._kernels import _qseries_py

try:
    from olim41._kernels import _qseries_cy
except ImportError:
    _qseries_cy = None


def _time(fn, N, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        value, abs_sum = fn(N, p)
        best = min(best, time.perf_counter() - start)
    return best, value, abs_sum


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="50,100,200,400",
                        help="comma-separated N values")
    parser.add_argument("--p", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _qseries_cy is None:
        print("compiled kernel unavailable; showing the python backend only")
    header = f"{'kernel':10s} {'N':>5s} {'time':>10s} {'speedup':>8s} {'noise-ratio':>12s}"
    for name, fn_py, fn_cy in (
        ("direct", _qseries_py.direct_sum,
         _qseries_cy.direct_sum if _qseries_cy else None),
        ("double", _qseries_py.double_sum,
         _qseries_cy.double_sum if _qseries_cy else None),
    ):
        print(f"== {name}_sum(N, p={args.p}) ==")
        print(header)
        for N in sizes:
            t_py, v_py, a_py = _time(fn_py, N, args.p, args.repeat)
            print(f"{'python':10s} {N:5d} {t_py * 1e3:8.2f}ms {'':>8s} {'':>12s}")
            if fn_cy is None:
                continue
            t_cy, v_cy, a_cy = _time(fn_cy, N, args.p, args.repeat)
            noise = max(a_py, a_cy) * 1e-15
            ratio = abs(v_py - v_cy) / noise if noise else 0.0
            print(f"{'cython':10s} {N:5d} {t_cy * 1e3:8.2f}ms {t_py / t_cy:7.1f}x "
                  f"{ratio:12.3g}")
        print()


if __name__ == "__main__":
    main()
