"""Compare the numba and numpy row-reduction kernels over Z/p.

Usage: python3 benchmarks/bench_rref.py [--sizes 100 200 400] [--p 2] [--repeat 3]

Also times mod 2 cohomology of a solid lattice grid, whose coboundary
matrices are large and sparse.
"""
from __future__ import annotations

import argparse
import time
from itertools import product

import numpy as np

from einfty._kernels import HAVE_NUMBA, rref_mod_p
from einfty.complexes import LatticeCubicalComplex
from einfty.homology import coboundary_matrix


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def grid(k: int) -> LatticeCubicalComplex:
    return LatticeCubicalComplex([tuple((x, x + 1) for x in c) for c in product(range(k), repeat=3)])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--grid", type=int, default=4)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable or disabled (EINFTY_DISABLE_JIT); only the numpy path runs")
    rng = np.random.default_rng(0)
    cases = [(f"random {n}x{n}", rng.integers(0, args.p, (n, n))) for n in args.sizes]
    X = grid(args.grid)
    for d in range(X.dim):
        cases.append((f"grid{args.grid}^3 delta^{d} {coboundary_matrix(X, d).shape}", coboundary_matrix(X, d) % args.p))
    if HAVE_NUMBA:
        rref_mod_p(np.eye(2, dtype=np.int64), args.p, use_jit=True)  # compile outside the timing
    print(f"{'case':40s} {'numpy [s]':>10s} {'numba [s]':>10s} {'speedup':>8s}")
    for name, a in cases:
        t_np = best_of(lambda: rref_mod_p(a, args.p, use_jit=False), args.repeat)
        if HAVE_NUMBA:
            r1, p1 = rref_mod_p(a, args.p, use_jit=True)
            r2, p2 = rref_mod_p(a, args.p, use_jit=False)
            assert (r1 == r2).all() and (p1 == p2).all(), "kernels disagree"
            t_nb = best_of(lambda: rref_mod_p(a, args.p, use_jit=True), args.repeat)
            print(f"{name:40s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.1f}x")
        else:
            print(f"{name:40s} {t_np:10.4f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
