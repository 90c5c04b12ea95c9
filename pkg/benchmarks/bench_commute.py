#!/usr/bin/env python3
"""Benchmark the compiled commute-time kernel against the NumPy fallback.

Both kernels draw identical per-walk random streams, so their moments must
match bit for bit; the table reports wall time and speedup per case.

    python benchmarks/bench_commute.py [--walks N]
"""

import argparse
import time

from rescurv import commute, cycle, grid, hypercube, path, star
from rescurv import _commute_py

CASES = [
    ("K2", path(2), 0, 1),
    ("C4 adjacent", cycle(4), 0, 1),
    ("P5 ends", path(5), 0, 4),
    ("S4 hub-leaf", star(4), 0, 1),
    ("grid33 central rung", grid(3, 3), 4, 5),
    ("Q3 antipodal", hypercube(3), 0, 7),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--walks", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    try:
        from rescurv import _commute as compiled
    except ImportError:
        print("compiled kernel not built (install without RESCURV_NO_EXT to get it)")
        return 1

    print(f"walks per case: {args.walks}, seed: {args.seed}")
    print(f"{'case':<22}{'compiled [s]':>14}{'numpy [s]':>12}{'speedup':>9}  match")
    total_c = total_p = 0.0
    for name, g, u, v in CASES:
        indptr, nbrs = commute.adjacency_csr(g)
        t0 = time.perf_counter()
        mc = compiled.commute_moments(indptr, nbrs, u, v, args.walks, args.seed)
        tc = time.perf_counter() - t0
        t0 = time.perf_counter()
        mp = _commute_py.commute_moments(indptr, nbrs, u, v, args.walks, args.seed)
        tp = time.perf_counter() - t0
        total_c += tc
        total_p += tp
        print(f"{name:<22}{tc:>14.3f}{tp:>12.3f}{tp / tc:>9.1f}x  {mc == mp}")
        if mc != mp:
            print(f"  MISMATCH: compiled={mc} numpy={mp}")
            return 1
    print(f"{'total':<22}{total_c:>14.3f}{total_p:>12.3f}{total_p / total_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
