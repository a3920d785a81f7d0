"""NumPy fallback kernels for the dense symmetric eigensolver.

Same contracts as the compiled module: Householder tridiagonalization with
reflectors stored in the strict lower triangle, implicit-shift QL on the
tridiagonal, a partially pivoted shifted tridiagonal solve, and the reflector
back-transform.  The QL sweep is a scalar recurrence, so this backend is an
order of magnitude slower than the compiled one at n in the thousands.
"""

from __future__ import annotations

import math

import numpy as np


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Reduce symmetric ``a`` (overwritten) to tridiagonal form.

    Returns (d, e, tau): diagonal, subdiagonal (length n-1) and Householder
    scaling factors (length max(n-2, 0)).  Reflector vectors end up in the
    strict lower triangle of ``a``: column k holds v_k with v_k acting on
    rows k+1..n-1, H_k = I - tau[k] v_k v_k^T.
    """
    n = a.shape[0]
    d = np.empty(n)
    e = np.zeros(n - 1 if n > 1 else 0)
    tau = np.zeros(n - 2 if n > 2 else 0)
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        alpha = math.sqrt(float(x @ x))
        if alpha == 0.0:
            continue
        if x[0] > 0.0:
            alpha = -alpha
        v = x
        v[0] -= alpha
        vv = float(v @ v)
        if vv == 0.0:
            e[k] = alpha
            continue
        beta = 2.0 / vv
        sub = a[k + 1:, k + 1:]
        p = beta * (sub @ v)
        w = p - (0.5 * beta * float(p @ v)) * v
        sub -= np.outer(v, w) + np.outer(w, v)
        e[k] = alpha
        a[k + 1:, k] = v
        tau[k] = beta
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    d[:] = np.diagonal(a)
    return d, e, tau


def tridiag_eigenvalues(d: np.ndarray, e: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL.

    Inputs are not modified.  Returns the eigenvalues unsorted.
    """
    n = len(d)
    dd = list(map(float, d))
    ee = list(map(float, e)) + [0.0]
    eps = np.finfo(float).eps
    hypot = math.hypot
    copysign = math.copysign
    for l in range(n):
        iters = 0
        while True:
            for m in range(l, n - 1):
                s = abs(dd[m]) + abs(dd[m + 1])
                if abs(ee[m]) <= eps * s:
                    break
            else:
                m = n - 1
            if m == l:
                break
            iters += 1
            if iters > 60:
                raise RuntimeError("QL iteration failed to converge")
            g = (dd[l + 1] - dd[l]) / (2.0 * ee[l])
            r = hypot(g, 1.0)
            g = dd[m] - dd[l] + ee[l] / (g + copysign(r, g))
            s = c = 1.0
            p = 0.0
            interrupted = False
            for i in range(m - 1, l - 1, -1):
                f = s * ee[i]
                b = c * ee[i]
                r = hypot(f, g)
                ee[i + 1] = r
                if r == 0.0:
                    dd[i + 1] -= p
                    ee[m] = 0.0
                    interrupted = True
                    break
                s = f / r
                c = g / r
                g = dd[i + 1] - p
                r = (dd[i] - g) * s + 2.0 * c * b
                p = s * r
                dd[i + 1] = g + p
                g = c * r - b
            if not interrupted:
                dd[l] -= p
                ee[l] = g
                ee[m] = 0.0
    return np.array(dd)


def tridiag_solve(d: np.ndarray, e: np.ndarray, shift: float,
                  rhs: np.ndarray) -> np.ndarray:
    """Solve (T - shift*I) y = rhs with partial pivoting (one fill diagonal).

    Near-singular pivots are replaced by a tiny multiple of the matrix norm,
    which is exactly what inverse iteration wants.
    """
    n = len(d)
    u = [float(d[i]) - shift for i in range(n)]
    v = [float(e[i]) for i in range(n - 1)] + [0.0]
    w = [0.0] * n
    sub = [float(e[i]) for i in range(n - 1)]
    y = list(map(float, rhs))
    norm = max(abs(x) for x in u) + max((abs(x) for x in v), default=0.0)
    tiny = np.finfo(float).eps * max(norm, 1.0)
    for i in range(n - 1):
        if abs(sub[i]) > abs(u[i]):
            u[i], sub[i] = sub[i], u[i]
            u[i + 1], v[i] = v[i], u[i + 1]
            w[i], v[i + 1] = v[i + 1], w[i]
            y[i], y[i + 1] = y[i + 1], y[i]
        if u[i] == 0.0:
            u[i] = tiny
        f = sub[i] / u[i]
        u[i + 1] -= f * v[i]
        v[i + 1] -= f * w[i]
        y[i + 1] -= f * y[i]
    if u[n - 1] == 0.0:
        u[n - 1] = tiny
    y[n - 1] /= u[n - 1]
    if n >= 2:
        y[n - 2] = (y[n - 2] - v[n - 2] * y[n - 1]) / u[n - 2]
    for i in range(n - 3, -1, -1):
        y[i] = (y[i] - v[i] * y[i + 1] - w[i] * y[i + 2]) / u[i]
    return np.array(y)


def apply_reflectors(a: np.ndarray, tau: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Back-transform a tridiagonal eigenvector to the original basis."""
    x = y.astype(float).copy()
    for k in range(len(tau) - 1, -1, -1):
        if tau[k] == 0.0:
            continue
        v = a[k + 1:, k]
        seg = x[k + 1:]
        seg -= (tau[k] * float(v @ seg)) * v
    return x
