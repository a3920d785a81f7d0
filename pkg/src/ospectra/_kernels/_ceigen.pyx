# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: Householder tridiagonalization and implicit-shift QL.

Mirrors ospectra._kernels.pure exactly; see that module for the contracts.
"""

from libc.math cimport sqrt, fabs, hypot, copysign

import numpy as np
cimport numpy as cnp

cnp.import_array()


def tridiagonalize(cnp.ndarray[cnp.float64_t, ndim=2] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] d = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] e = np.zeros(n - 1 if n > 1 else 0)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tau = np.zeros(n - 2 if n > 2 else 0)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] p = np.empty(n)
    cdef double[:, :] A = a
    cdef double[:] V = v
    cdef double[:] P = p
    cdef Py_ssize_t k, i, j
    cdef double alpha, vv, beta, pv, acc, wi, wj, vi

    for k in range(n - 2):
        vv = 0.0
        for i in range(k + 1, n):
            V[i] = A[i, k]
            vv += V[i] * V[i]
        alpha = sqrt(vv)
        if alpha == 0.0:
            continue
        if V[k + 1] > 0.0:
            alpha = -alpha
        V[k + 1] -= alpha
        vv = 0.0
        for i in range(k + 1, n):
            vv += V[i] * V[i]
        if vv == 0.0:
            e[k] = alpha
            continue
        beta = 2.0 / vv
        # p = beta * A[k+1:, k+1:] @ v
        pv = 0.0
        for i in range(k + 1, n):
            acc = 0.0
            for j in range(k + 1, n):
                acc += A[i, j] * V[j]
            P[i] = beta * acc
            pv += P[i] * V[i]
        # w = p - (beta/2)(p.v) v ; A -= v w^T + w v^T
        acc = 0.5 * beta * pv
        for i in range(k + 1, n):
            P[i] -= acc * V[i]
        for i in range(k + 1, n):
            wi = P[i]
            vi = V[i]
            for j in range(k + 1, n):
                A[i, j] -= vi * P[j] + wi * V[j]
        e[k] = alpha
        tau[k] = beta
        for i in range(k + 1, n):
            A[i, k] = V[i]
    if n >= 2:
        e[n - 2] = A[n - 1, n - 2]
    for i in range(n):
        d[i] = A[i, i]
    return d, e, tau


def tridiag_eigenvalues(cnp.ndarray[cnp.float64_t, ndim=1] d_in,
                        cnp.ndarray[cnp.float64_t, ndim=1] e_in):
    cdef Py_ssize_t n = d_in.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dd = d_in.astype(np.float64).copy()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ee = np.zeros(n)
    cdef double[:] D = dd
    cdef double[:] E = ee
    cdef Py_ssize_t l, m, i
    cdef int iters, interrupted
    cdef double eps = np.finfo(float).eps
    cdef double s, c, p, g, r, f, b, scale

    for i in range(n - 1):
        E[i] = e_in[i]
    for l in range(n):
        iters = 0
        while True:
            m = l
            while m < n - 1:
                scale = fabs(D[m]) + fabs(D[m + 1])
                if fabs(E[m]) <= eps * scale:
                    break
                m += 1
            if m == l:
                break
            iters += 1
            if iters > 60:
                raise RuntimeError("QL iteration failed to converge")
            g = (D[l + 1] - D[l]) / (2.0 * E[l])
            r = hypot(g, 1.0)
            g = D[m] - D[l] + E[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            interrupted = 0
            for i in range(m - 1, l - 1, -1):
                f = s * E[i]
                b = c * E[i]
                r = hypot(f, g)
                E[i + 1] = r
                if r == 0.0:
                    D[i + 1] -= p
                    E[m] = 0.0
                    interrupted = 1
                    break
                s = f / r
                c = g / r
                g = D[i + 1] - p
                r = (D[i] - g) * s + 2.0 * c * b
                p = s * r
                D[i + 1] = g + p
                g = c * r - b
            if not interrupted:
                D[l] -= p
                E[l] = g
                E[m] = 0.0
    return dd
