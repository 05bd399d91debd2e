"""Time lattice-point counting with the numba and numpy backends.

    python3 benchmarks/bench_lattice_points.py [--repeat N]

Both backends must return identical counts; the script exits non-zero
otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time

from gorenstein import catalog
from gorenstein.core import _kernels

CASES = [
    ("unit_cube_3", catalog.unit_cube(3), 80),
    ("cross_polytope_3", catalog.cross_polytope(3), 60),
    ("diamond_pair_halflattice", catalog.diamond_pair_halflattice()[0], 16),
    ("cayley_tetra_pair_7d", catalog.cayley_tetra_pair_7d()[0], 12),
]


def _time(P, k, which, repeat):
    best, n = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        n = P.count_points(k, which=which)
        best = min(best, time.perf_counter() - t)
    return n, best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        print("numba not installed; only the numpy backend is available")
        return 1
    # compile once outside the timed region
    catalog.unit_cube(2).count_points(2, which="numba")
    print(f"{'case':28} {'k':>3} {'points':>12} {'numba s':>10} {'numpy s':>10} {'ratio':>7}")
    ok = True
    for name, P, k in CASES:
        n1, t1 = _time(P, k, "numba", args.repeat)
        n2, t2 = _time(P, k, "numpy", args.repeat)
        ok &= n1 == n2
        print(f"{name:28} {k:>3} {n1:>12} {t1:>10.4f} {t2:>10.4f} {t2 / t1:>7.1f}")
    if not ok:
        print("backend mismatch", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
