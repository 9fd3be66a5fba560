"""Time the census kernels: compiled extension against the pure-Python twin.

Usage: python benchmarks/compare_backends.py [max_m]

Runs the filtered involution sweep (centrosymmetric, 321-avoiding) at a few
sizes with both backends and prints wall times plus the speedup.  The two
backends must return identical tallies; that is asserted here as well as in
the test suite.  The default stops at m = 13; pass 15 to reproduce the
acceptance-scale sweep, which the fallback finishes in minutes and the
extension in well under a second.
"""

import sys
from time import perf_counter

from centroinv import _kernel_py

try:
    from centroinv import _kernel
except ImportError:
    _kernel = None


def involution_count(m):
    a, b = 1, 1
    for k in range(2, m + 1):
        a, b = b, b + (k - 1) * a
    return b


def time_one(fn, m):
    start = perf_counter()
    out = fn(m, True, True)
    return out, perf_counter() - start


def main(argv):
    max_m = int(argv[1]) if len(argv) > 1 else 13
    sizes = [m for m in (8, 10, 11, 12, 13, 14, 15) if m <= max_m]
    print(
        f"{'m':>3} {'walked':>10} {'survivors':>10}"
        f" {'python':>10} {'compiled':>10} {'speedup':>8}"
    )
    for m in sizes:
        py_out, py_t = time_one(_kernel_py.involution_census, m)
        walked = involution_count(m)
        if _kernel is None:
            print(
                f"{m:>3} {walked:>10} {py_out['count']:>10}"
                f" {py_t:>9.3f}s {'-':>10} {'-':>8}"
            )
            continue
        c_out, c_t = time_one(_kernel.involution_census, m)
        assert c_out == py_out, f"backends disagree at m={m}"
        speed = py_t / c_t if c_t else float("inf")
        print(
            f"{m:>3} {walked:>10} {py_out['count']:>10}"
            f" {py_t:>9.3f}s {c_t:>9.3f}s {speed:>7.1f}x"
        )
    if _kernel is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main(sys.argv)
