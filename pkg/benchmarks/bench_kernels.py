#!/usr/bin/env python3
"""Benchmark: compiled eigensolver kernels against the NumPy fallback.

Times the full value pipeline (tridiagonalization + implicit-shift QL) on
fan graphs, which dominate the verification suite's runtime.  LAPACK's
eigvalsh is shown alongside as a reference point, not as a backend.

Usage: python benchmarks/bench_kernels.py [--sizes 200,400,800,1600]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ospectra._kernels import pure
from ospectra.eigen import adjacency_matrix
from ospectra.families import fan

try:
    from ospectra._kernels import _ceigen
except ImportError:
    _ceigen = None


def solve(impl, a):
    w = a.copy()
    d, e, _ = impl.tridiagonalize(w)
    return np.sort(impl.tridiag_eigenvalues(d, e))[::-1]


def bench(fn, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="200,400,800,1600")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"{'n':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8} "
          f"{'lapack (s)':>11} {'max |diff|':>11}")
    for n in sizes:
        a = adjacency_matrix(fan(n))
        t_pure, v_pure = bench(lambda: solve(pure, a), args.repeats)
        if _ceigen is not None:
            t_c, v_c = bench(lambda: solve(_ceigen, a), args.repeats)
            diff = float(np.abs(v_pure - v_c).max())
            speed = t_pure / t_c
            c_txt, s_txt = f"{t_c:10.3f}", f"{speed:7.1f}x"
        else:
            diff = float("nan")
            c_txt, s_txt = "   (absent)", "      --"
        t_l, v_l = bench(lambda: np.sort(np.linalg.eigvalsh(a))[::-1],
                         args.repeats)
        ref_diff = float(np.abs(v_pure - v_l).max())
        print(f"{n:>6} {t_pure:10.3f} {c_txt:>13} {s_txt:>8} {t_l:11.3f} "
              f"{max(diff if diff == diff else 0.0, ref_diff):11.2e}")


if __name__ == "__main__":
    main()
