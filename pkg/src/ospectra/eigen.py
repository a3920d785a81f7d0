"""Dense symmetric eigensolver with interlacing and walk-identity checks.

The solver is self-contained: Householder tridiagonalization plus
implicit-shift QL for values (compiled kernel when available) and inverse
iteration with Rayleigh refinement for selected vectors.  Absolute accuracy
is around 1e-12 at the sizes used here (n <= 4096); every spectrum is
sanity-checked against its trace identities before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import Graph, LargeGraph, bits

MAX_DENSE_N = 4096
SIMPLE_GAP = 1e-8


class SolverError(RuntimeError):
    """The solver produced values failing its own consistency identities."""


class MultiplicityError(RuntimeError):
    """Requested eigenpair is not numerically simple."""

    def __init__(self, k: int, gap: float):
        super().__init__(f"eigenvalue {k} has neighbor gap {gap:.3e} below {SIMPLE_GAP}")
        self.k = k
        self.gap = gap


class DegenerateRatioError(RuntimeError):
    """Eigenvector entry too small to take a ratio against."""


def adjacency_matrix(g) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if isinstance(g, Graph):
        for u in range(g.n):
            for v in bits(g.adj[u]):
                a[u, v] = 1.0
    else:
        for u, v in g.edges():
            a[u, v] = a[v, u] = 1.0
    return a


def _as_matrix(g) -> np.ndarray:
    if isinstance(g, (Graph, LargeGraph)):
        if g.n > MAX_DENSE_N:
            raise ValueError(f"dense solver capped at n = {MAX_DENSE_N}")
        return adjacency_matrix(g)
    a = np.asarray(g, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix or a Graph")
    if a.shape[0] > MAX_DENSE_N:
        raise ValueError(f"dense solver capped at n = {MAX_DENSE_N}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a.copy()


@dataclass
class Spectrum:
    """Eigenvalues in non-increasing order plus solver diagnostics."""

    values: np.ndarray
    n: int
    trace_error: float
    square_error: float
    residual_bound: float | None = None

    def gap(self, k: int) -> float:
        """lambda_k - lambda_{k+1}, 1-based k."""
        return float(self.values[k - 1] - self.values[k])

    def value(self, k: int) -> float:
        return float(self.values[k - 1])


@dataclass
class EigenPair:
    k: int
    value: float
    vector: np.ndarray
    residual: float
    simple: bool


def spectrum(g) -> Spectrum:
    """All eigenvalues of a graph or dense symmetric matrix, sorted descending.

    Raises SolverError if the trace identities (sum of values = trace,
    sum of squares = Frobenius norm squared) fail beyond tolerance.
    """
    a = _as_matrix(g)
    n = a.shape[0]
    tr = float(np.trace(a))
    fro2 = float((a * a).sum())
    d, e, _tau = _kernels.tridiagonalize(a)
    vals = _kernels.tridiag_eigenvalues(d, e)
    vals = np.sort(vals)[::-1].copy()
    scale = max(1.0, float(np.abs(vals).max(initial=0.0)))
    trace_err = abs(float(vals.sum()) - tr)
    square_err = abs(float((vals * vals).sum()) - fro2)
    if trace_err > 1e-8 * n * scale:
        raise SolverError(f"trace identity off by {trace_err:.3e}")
    if square_err > 1e-8 * max(fro2, 1.0):
        raise SolverError(f"second moment identity off by {square_err:.3e}")
    return Spectrum(vals, n, trace_err, square_err)


def eigenpair(g, k: int, residual_tol: float = 1e-9, seed: int = 0) -> EigenPair:
    """k-th eigenpair (1-based, values descending) by inverse iteration.

    Requires the eigenvalue to be numerically simple (neighbor gaps above
    1e-8); the returned vector has unit norm, residual ||Ax - lambda x||
    below ``residual_tol``, and its largest-magnitude entry positive.
    """
    a = _as_matrix(g)
    n = a.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} outside 1..{n}")
    work = a.copy()
    d, e, tau = _kernels.tridiagonalize(work)
    vals = np.sort(_kernels.tridiag_eigenvalues(d, e))[::-1]
    lam = float(vals[k - 1])
    gap = min(
        vals[k - 2] - vals[k - 1] if k >= 2 else np.inf,
        vals[k - 1] - vals[k] if k < n else np.inf,
    )
    if gap < SIMPLE_GAP:
        raise MultiplicityError(k, float(gap))

    rng = np.random.default_rng(seed)
    y = rng.standard_normal(n)
    y /= np.linalg.norm(y)
    mu = lam
    for _ in range(4):
        y = _kernels.tridiag_solve(d, e, mu, y)
        norm = np.linalg.norm(y)
        y /= norm
        # Rayleigh refinement on the tridiagonal form
        ty = d * y
        if n > 1:
            ty[:-1] += e * y[1:]
            ty[1:] += e * y[:-1]
        rayleigh = float(y @ ty)
        resid_t = np.linalg.norm(ty - rayleigh * y)
        if abs(rayleigh - lam) < gap / 3:
            mu = rayleigh
        if resid_t < residual_tol / 10:
            break
    x = _kernels.apply_reflectors(work, tau, y)
    x /= np.linalg.norm(x)
    residual = float(np.linalg.norm(a @ x - lam * x))
    if residual > residual_tol:
        raise SolverError(f"eigenvector residual {residual:.3e} above {residual_tol}")
    imax = int(np.argmax(np.abs(x)))
    if x[imax] < 0:
        x = -x
    return EigenPair(k, lam, x, residual, True)


def check_interlacing(g, deleted, tol: float = 1e-9) -> tuple[bool, float]:
    """Verify Cauchy interlacing between a graph and an induced subgraph.

    Returns (holds, max_violation); a violation beyond tolerance signals a
    solver bug, since interlacing is a theorem.
    """
    if isinstance(g, Graph):
        from .graphs import mask_of

        dmask = mask_of(deleted)
        if dmask == 0 or dmask.bit_count() >= g.n:
            raise ValueError("deleted set must be a nonempty proper subset")
        sub = g.induced(((1 << g.n) - 1) & ~dmask)
        big = spectrum(g).values
        small = spectrum(sub).values
    else:
        a = _as_matrix(g)
        keep = [i for i in range(a.shape[0]) if i not in set(deleted)]
        if len(keep) in (0, a.shape[0]):
            raise ValueError("deleted set must be a nonempty proper subset")
        big = spectrum(a).values
        small = spectrum(a[np.ix_(keep, keep)]).values
    r = len(big) - len(small)
    worst = 0.0
    for i in range(len(small)):
        worst = max(worst, small[i] - big[i], big[i + r] - small[i])
    return worst <= tol, float(worst)


def moment_identity_residual(g: Graph, k: int, i: int, u: int,
                             pair: EigenPair | None = None) -> float:
    """|sum_w x_w w_i(u, w) - lambda^i x_u| for the k-th eigenpair.

    The walk counts w_i(u, .) are exact integers, so this residual isolates
    eigenpair error; it must stay around solver accuracy for i <= 6.
    """
    if not isinstance(g, Graph):
        raise TypeError("walk identities need a Graph")
    if i > 6:
        raise ValueError("identity checked for i <= 6 only")
    if pair is None:
        pair = eigenpair(g, k)
    vec = [0] * g.n  # vec[w] = number of length-i walks from u to w, exact
    vec[u] = 1
    for _ in range(i):
        vec = [sum(vec[w] for w in bits(g.adj[t])) for t in range(g.n)]
    lhs = float(np.dot(pair.vector, np.array(vec, dtype=float)))
    return abs(lhs - pair.value**i * float(pair.vector[u]))


@dataclass
class HubRatio:
    ratio: float
    value: float          # the eigenvalue used (lambda_2)
    cross_edges: int      # |E(N(u1), N(u2))| away from the hubs
    predicted: float | None  # -lambda / cross_edges when defined
    rel_deviation: float | None


def hub_ratio(g, u1: int, u2: int, seed: int = 0) -> HubRatio:
    """Eigenvector ratio x_{u2}/x_{u1} for lambda_2, with the large-degree
    model -lambda/|E(N(u1),N(u2))| it should approach for unequal hubs."""
    pair = eigenpair(g, 2, seed=seed)
    x1 = float(pair.vector[u1])
    x2 = float(pair.vector[u2])
    if abs(x1) < 1e-12:
        raise DegenerateRatioError(f"|x_u1| = {abs(x1):.3e} too small")
    ratio = x2 / x1
    hubs = {u1, u2}
    n1 = set(g.neighbors(u1)) - hubs
    n2 = set(g.neighbors(u2)) - hubs
    cross = sum(1 for v in n1 for w in g.neighbors(v) if w in n2)
    predicted = -pair.value / cross if cross else None
    rel = abs(ratio - predicted) / abs(predicted) if predicted else None
    return HubRatio(ratio, pair.value, cross, predicted, rel)
