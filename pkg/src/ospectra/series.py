"""Characteristic walk-count series for two-hub graphs.

A graph whose targeted eigenvalue lambda is dominated by one or two
large-degree hubs satisfies a truncated equation lambda^2 = sum a_i/lambda^i
whose coefficients are walk counts of the hub-deleted subgraph.  This module
builds those series exactly (integer moments), attaches a rigorous geometric
tail bound in place of asymptotic remainders, solves the equations with
certified enclosures, expands the largest root in powers of 1/sqrt(a_0), and
compares roots of two series with a never-wrong verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph

Coeff = Fraction | float


class SeriesModeError(ValueError):
    """Decomposition mode not applicable to this graph/hub pair."""


class BracketError(RuntimeError):
    """Root bracketing or monotonicity check failed."""


# ---------------------------------------------------------------------------
# hub decomposition and exact moment tables


def _neighbor_lists(g) -> list[tuple[int, ...]]:
    if isinstance(g, Graph):
        return [g.neighbors(u) for u in range(g.n)]
    return list(g.adj)


@dataclass
class HubDecomposition:
    """Hubs u1, u2, the hub-deleted subgraph, and the walk-weight mode.

    The per-vertex weight vectors over the deleted subgraph are x_{u1} (resp.
    x_{u2}, their sum) on the exclusive (resp. shared) neighborhoods for the
    forward vector, and the reciprocals for the test vector.  All modes share
    the same integer moment tables; they differ only in the scalar that
    multiplies the cross moments:

    - symmetric: ratio x_{u2}/x_{u1} = -1 exactly (swap automorphism or
      numerically confirmed), cross scalar -2;
    - exact: numeric ratio from the lambda_2 eigenvector;
    - bound: cross scalar -2 as an upper bound (any negative ratio r has
      r + 1/r <= -2), so coefficients are upper bounds, not values;
    - split: no scalar, the three moment families are kept separate.
    """

    n: int
    u1: int
    u2: int
    mode: str
    hubs_adjacent: bool
    p_adj: list[tuple[int, ...]]        # hub-deleted subgraph, relabelled
    n1: tuple[int, ...]                 # neighbors of u1 inside P (P labels)
    n2: tuple[int, ...]
    ratio: float | Fraction | None      # x_{u2}/x_{u1} (None in split/bound)
    sigma: float                        # upper bound on lambda_1 of P

    @property
    def shared(self) -> int:
        return len(set(self.n1) & set(self.n2))

    def forward_weights(self) -> list[Coeff]:
        """The series-defining vector over P (x_{u1} normalized to 1)."""
        rho = self.ratio if self.ratio is not None else Fraction(-1)
        w: list[Coeff] = [0] * len(self.p_adj)
        for v in self.n1:
            w[v] += 1
        for v in self.n2:
            w[v] += rho
        return w

    def test_weights(self) -> list[Coeff]:
        rho = self.ratio if self.ratio is not None else Fraction(-1)
        w: list[Coeff] = [0] * len(self.p_adj)
        for v in self.n1:
            w[v] += 1
        for v in self.n2:
            w[v] += 1 / rho
        return w


def _moment_tables(p_adj, n1, n2, order):
    """Exact integer M_i(N1,N1), M_i(N2,N2), M_i(N1,N2) on the subgraph."""
    npts = len(p_adj)
    i1 = [0] * npts
    i2 = [0] * npts
    for v in n1:
        i1[v] = 1
    for v in n2:
        i2[v] = 1
    v1, v2 = list(i1), list(i2)
    m11, m22, m12 = [], [], []
    for _ in range(order + 1):
        m11.append(sum(v1[v] for v in n1))
        m22.append(sum(v2[v] for v in n2))
        m12.append(sum(v2[v] for v in n1))
        v1 = [sum(v1[w] for w in p_adj[u]) for u in range(npts)]
        v2 = [sum(v2[w] for w in p_adj[u]) for u in range(npts)]
    return m11, m22, m12


def _spectral_upper_bound(p_adj) -> float:
    """Rigorous-ish upper bound on lambda_1 of the subgraph.

    Exact dense solve (plus safety margin well above solver error) when
    small; otherwise the max over edges of sqrt(d_u d_v), which always
    dominates the spectral radius.
    """
    n = len(p_adj)
    if n == 0:
        return 0.0
    degs = [len(row) for row in p_adj]
    if max(degs, default=0) == 0:
        return 0.0
    edge_bound = max(math.sqrt(degs[u] * degs[v])
                     for u in range(n) for v in p_adj[u])
    if n > 1024:
        return edge_bound
    import numpy as np

    from .eigen import spectrum

    a = np.zeros((n, n))
    for u in range(n):
        for v in p_adj[u]:
            a[u, v] = 1.0
    lam1 = float(spectrum(a).values[0])
    return min(edge_bound, lam1 + 1e-6)


def decompose(g, u1: int, u2: int, mode: str = "symmetric",
              sigma: float | None = None, seed: int = 0) -> HubDecomposition:
    """Delete two hubs and set up the walk-series weight data.

    Symmetric mode insists on an automorphism swapping the hubs, or failing
    that a numeric eigenvector ratio within 1e-8 of -1.  Exact mode computes
    the ratio from the lambda_2 eigenpair (which must be simple).  Adjacent
    hubs are allowed (the vectors live on the hub-deleted subgraph either
    way) but flagged, since the extremal graphs never have that edge.
    """
    if mode not in ("symmetric", "exact", "bound", "split"):
        raise SeriesModeError(f"unknown mode {mode!r}")
    if u1 == u2:
        raise ValueError("hubs must differ")
    adj = _neighbor_lists(g)
    n = g.n
    hubs_adjacent = u2 in adj[u1]
    keep = [v for v in range(n) if v not in (u1, u2)]
    pos = {v: i for i, v in enumerate(keep)}
    p_adj = [tuple(pos[w] for w in adj[v] if w in pos) for v in keep]
    n1 = tuple(pos[w] for w in adj[u1] if w in pos)
    n2 = tuple(pos[w] for w in adj[u2] if w in pos)

    ratio: float | Fraction | None
    if mode == "symmetric":
        ratio = Fraction(-1)
        if not _has_swap_automorphism(g, u1, u2):
            from .eigen import eigenpair

            pair = eigenpair(g, 2, seed=seed)
            x1, x2 = float(pair.vector[u1]), float(pair.vector[u2])
            if abs(x1) < 1e-12 or abs(x2 / x1 + 1.0) > 1e-8:
                raise SeriesModeError(
                    "symmetric mode needs a hub-swapping automorphism or a "
                    f"ratio within 1e-8 of -1 (got {x2 / x1 if abs(x1) > 0 else 'nan'})")
    elif mode == "exact":
        from .eigen import DegenerateRatioError, eigenpair

        pair = eigenpair(g, 2, seed=seed)
        x1 = float(pair.vector[u1])
        if abs(x1) < 1e-12:
            raise DegenerateRatioError("x_{u1} vanishes; exact mode undefined")
        ratio = float(pair.vector[u2]) / x1
    else:
        ratio = None

    sig = sigma if sigma is not None else _spectral_upper_bound(p_adj)
    return HubDecomposition(n, u1, u2, mode, hubs_adjacent, p_adj, n1, n2,
                            ratio, sig)


def _has_swap_automorphism(g, u1: int, u2: int) -> bool:
    """Is there an automorphism exchanging u1 and u2?

    Checked by comparing canonical forms of the graph with the two hubs
    colored one way and the other.  Falls back to False beyond the bitset
    range (the numeric ratio check then decides).
    """
    if not isinstance(g, Graph):
        if g.n <= 64:
            from .graphs import as_bitset_graph

            g = as_bitset_graph(g)
        else:
            return _has_swap_automorphism_large(g, u1, u2)
    from .enumeration import canonical_form

    base = [0] * g.n
    c12 = list(base)
    c12[u1], c12[u2] = 1, 2
    c21 = list(base)
    c21[u1], c21[u2] = 2, 1
    return canonical_form(g, colors=c12) == canonical_form(g, colors=c21)


def _has_swap_automorphism_large(g, u1: int, u2: int) -> bool:
    """Cheap sufficient check for the regular family layouts: try the map
    that swaps the two components' labelings wholesale."""
    adj = _neighbor_lists(g)
    if len(adj[u1]) != len(adj[u2]):
        return False
    # candidate map: u1<->u2 extended greedily by sorted neighborhoods
    perm = _grow_swap_map(adj, u1, u2)
    if perm is None:
        return False
    edge = {(a, b) for a in range(g.n) for b in adj[a]}
    return all((perm[a], perm[b]) in edge for (a, b) in edge)


def _grow_swap_map(adj, u1, u2):
    n = len(adj)
    perm = [-1] * n
    taken = {u1, u2}
    queue = [(u1, u2), (u2, u1)]
    perm[u1], perm[u2] = u2, u1
    while queue:
        a, b = queue.pop()
        na = [v for v in adj[a] if perm[v] == -1]
        nb = [v for v in adj[b] if v not in taken]
        if len(na) != len(nb):
            return None
        na.sort(key=lambda v: (len(adj[v]), v))
        nb.sort(key=lambda v: (len(adj[v]), v))
        for x, y in zip(na, nb):
            if len(adj[x]) != len(adj[y]):
                return None
            perm[x] = y
            taken.add(y)
            queue.append((x, y))
    if -1 in perm:
        return None
    return perm


# ---------------------------------------------------------------------------
# series equations with certified tails


@dataclass
class SeriesEquation:
    """Truncated series sum_{i<=m} a_i/lambda^i with a geometric tail bound.

    The omitted tail is bounded by tail(lam) = U sigma^{m+1} /
    (lam^m (lam - sigma)) for lam > sigma, where sigma dominates the spectral
    radius of the moment subgraph and U dominates |a_i|/sigma^i.  Equations
    built in bound mode carry upper-bound coefficients and must not be read
    as eigenvalue estimates.
    """

    coeffs: tuple[Coeff, ...]
    kind: str = "series"
    tail_scale: float = 0.0           # U
    tail_base: float = 0.0            # sigma
    upper_bound_only: bool = False
    interval: tuple[float, float] | None = None

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, lam: float) -> float:
        acc = 0.0
        for i, c in enumerate(self.coeffs):
            acc += float(c) / lam**i
        return acc

    def tail(self, lam: float) -> float:
        if self.tail_scale == 0.0:
            return 0.0
        if lam <= self.tail_base:
            return math.inf
        m = self.order
        return self.tail_scale * self.tail_base**(m + 1) / (lam**m * (lam - self.tail_base))

    def tail_derivative_bound(self, lam: float) -> float:
        """Upper bound on |d/dlam| of the omitted tail."""
        if self.tail_scale == 0.0:
            return 0.0
        if lam <= self.tail_base:
            return math.inf
        x = self.tail_base / lam
        m = self.order
        s = x**(m + 1) * ((m + 1) - m * x) / (1 - x)**2
        return self.tail_scale * s / lam

    def eval_bounds(self, lam: float) -> tuple[float, float]:
        mid = self.eval(lam)
        t = self.tail(lam)
        return mid - t, mid + t

    def range_min(self, lo: float, hi: float) -> float:
        """Rigorous lower bound for the truncated sum over [lo, hi]."""
        acc = 0.0
        for i, c in enumerate(self.coeffs):
            c = float(c)
            acc += min(c / lo**i, c / hi**i)
        return acc

    def derivative_sup(self, lo: float, hi: float) -> float:
        """Rigorous upper bound for the truncated sum's derivative on [lo, hi]."""
        acc = 0.0
        for i, c in enumerate(self.coeffs):
            if i == 0:
                continue
            c = float(c)
            term_lo = -i * c / lo**(i + 1)
            term_hi = -i * c / hi**(i + 1)
            acc += max(term_lo, term_hi)
        return acc


@dataclass
class SplitSeries:
    """The three moment families of a hub pair, kept separate.

    hub1: walks inside N(u1); hub2: walks inside N(u2); cross: walks from
    N(u1) to N(u2).  The cross family starts at order 1 (its order-0 term,
    the overlap count, is folded into the hub series the way the eigenvalue
    equations want it only when the neighborhoods are disjoint; a nonzero
    overlap is reported so callers can refuse)."""

    hub1: SeriesEquation
    hub2: SeriesEquation
    cross: SeriesEquation
    overlap: int


def series_coefficients(dec: HubDecomposition, order: int = 6):
    """Series a_i = (M11_i + M22_i + r * M12_i)/2 for the decomposition mode.

    Returns a SeriesEquation, or a SplitSeries in split mode.  Coefficients
    are exact Fractions in symmetric and bound modes, floats in exact mode.
    """
    if order > 12:
        raise ValueError("series order capped at 12")
    m11, m22, m12 = _moment_tables(dec.p_adj, dec.n1, dec.n2, order)
    if dec.mode == "split":
        u1n, u2n = len(dec.n1), len(dec.n2)
        cross_u = math.sqrt(u1n * u2n)
        return SplitSeries(
            hub1=SeriesEquation(tuple(Fraction(x) for x in m11), "split-own",
                                u1n, dec.sigma),
            hub2=SeriesEquation(tuple(Fraction(x) for x in m22), "split-own",
                                u2n, dec.sigma),
            cross=SeriesEquation(tuple(Fraction(x) for x in m12), "split-cross",
                                 cross_u, dec.sigma),
            overlap=dec.shared,
        )
    if dec.mode in ("symmetric", "bound"):
        scalar = Fraction(-2)
        coeffs = tuple((Fraction(a) + Fraction(b) + scalar * Fraction(c)) / 2
                       for a, b, c in zip(m11, m22, m12))
        norm2 = len(set(dec.n1) ^ set(dec.n2))  # ||w||^2 at ratio -1
        u = 0.5 * norm2
        return SeriesEquation(coeffs, dec.mode, u, dec.sigma,
                              upper_bound_only=(dec.mode == "bound"))
    # exact mode
    rho = float(dec.ratio)
    scalar = rho + 1.0 / rho
    coeffs = tuple((a + b + scalar * c) / 2.0 for a, b, c in zip(m11, m22, m12))
    shared = dec.shared
    only1 = len(dec.n1) - shared
    only2 = len(dec.n2) - shared
    fw2 = only1 + rho**2 * only2 + (1 + rho)**2 * shared
    tw2 = only1 + only2 / rho**2 + (1 + 1 / rho)**2 * shared
    u = 0.5 * math.sqrt(fw2 * tw2)
    return SeriesEquation(coeffs, "exact", u, dec.sigma)


def hub_series(g, u: int, order: int = 6, sigma: float | None = None) -> SeriesEquation:
    """Single-hub series: lambda^2 = sum_i M_i(N(u), N(u) on G-u)/lambda^i.

    This is the equation the largest eigenvalue of a one-hub graph (a fan)
    satisfies; tails as in the two-hub case."""
    adj = _neighbor_lists(g)
    keep = [v for v in range(g.n) if v != u]
    pos = {v: i for i, v in enumerate(keep)}
    p_adj = [tuple(pos[w] for w in adj[v] if w in pos) for v in keep]
    nu = tuple(pos[w] for w in adj[u])
    m11, _, _ = _moment_tables(p_adj, nu, (), order)
    sig = sigma if sigma is not None else _spectral_upper_bound(p_adj)
    return SeriesEquation(tuple(Fraction(x) for x in m11), "single-hub",
                          float(len(nu)), sig)


def combined_even(dec: HubDecomposition, order: int = 6) -> SeriesEquation:
    """hub2 - cross combination, valid when the two hubs are exchangeable.

    For a hub-symmetric graph the eigen-equations collapse to
    lambda^2 = (own-walk series) - (cross-walk series)."""
    split = series_coefficients(
        dec if dec.mode == "split" else _as_split(dec), order)
    h1, h2, d = split.hub1.coeffs, split.hub2.coeffs, split.cross.coeffs
    if h1 != h2:
        raise SeriesModeError("combined form needs exchangeable hubs "
                              f"(own-walk tables differ: {h1} vs {h2})")
    coeffs = tuple(a - b for a, b in zip(h2, d))
    return SeriesEquation(coeffs, "combined-even",
                          split.hub2.tail_scale + split.cross.tail_scale,
                          dec.sigma)


def _as_split(dec: HubDecomposition) -> HubDecomposition:
    return HubDecomposition(dec.n, dec.u1, dec.u2, "split", dec.hubs_adjacent,
                            dec.p_adj, dec.n1, dec.n2, None, dec.sigma)


# ---------------------------------------------------------------------------
# ratio elimination (unequal hubs)


@dataclass
class EliminationResult:
    combined: SeriesEquation
    root: float
    enclosure: tuple[float, float]


def _fraction_sqrt(x: Fraction) -> Fraction:
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        raise ValueError(f"{x} is not a rational square")
    return Fraction(num, den)


def _series_sqrt(p: list[Fraction], order: int) -> list[Fraction]:
    """sqrt of a power series with p[0] a positive rational square."""
    s0 = _fraction_sqrt(p[0])
    s = [Fraction(0)] * (order + 1)
    s[0] = s0
    for k in range(1, order + 1):
        acc = sum((s[j] * s[k - j] for j in range(1, k)), Fraction(0))
        s[k] = (p[k] - acc) / (2 * s0)
    return s


def _series_sqrt_float(p: list[float], order: int) -> list[float]:
    s = [0.0] * (order + 1)
    s[0] = math.sqrt(p[0])
    for k in range(1, order + 1):
        acc = sum(s[j] * s[k - j] for j in range(1, k))
        s[k] = (p[k] - acc) / (2 * s[0])
    return s


def eliminate_ratio(hub1: SeriesEquation, hub2: SeriesEquation,
                    cross: SeriesEquation) -> EliminationResult:
    """Eliminate the unknown eigenvector hub ratio from the two equations.

    The pair lambda^2 = hub1 + cross*r, lambda^2 = hub2 + cross/r multiplies
    out to (lambda^2-hub1)(lambda^2-hub2) = cross^2, whose relevant branch is
    lambda^2 = ((hub1+hub2) - sqrt((hub1-hub2)^2 + 4 cross^2))/2.  The
    combined coefficients come out exact; the numeric root is bisected on the
    unexpanded branch formula.
    """
    order = min(hub1.order, hub2.order, cross.order)
    exact = all(not isinstance(c, float)
                for s in (hub1, hub2, cross) for c in s.coeffs[:order + 1])
    cast = Fraction if exact else float
    zero = Fraction(0) if exact else 0.0
    f1 = [cast(c) for c in hub1.coeffs[:order + 1]]
    f2 = [cast(c) for c in hub2.coeffs[:order + 1]]
    d = [cast(c) for c in cross.coeffs[:order + 1]]
    diff = [a - b for a, b in zip(f1, f2)]
    if all(c == 0 for c in diff):
        root_series = [2 * c for c in d]  # sqrt(4 cross^2) = 2 cross
    else:
        if diff[0] == 0:
            raise SeriesModeError("elimination needs distinct hub degrees or "
                                  "fully exchangeable hubs")
        sq = [zero] * (order + 1)
        for i in range(order + 1):
            for j in range(order + 1 - i):
                sq[i + j] += diff[i] * diff[j] + 4 * d[i] * d[j]
        root_series = _series_sqrt(sq, order) if exact else _series_sqrt_float(sq, order)
        if root_series[0] < 0:
            root_series = [-c for c in root_series]
    coeffs = tuple((a + b - s) / 2 for a, b, s in zip(f1, f2, root_series))
    # the branch formula is 1-Lipschitz in each of the three inputs, so the
    # certified remainder allowance is the plain sum of the three tails
    tail_u = hub1.tail_scale + hub2.tail_scale + cross.tail_scale
    sigma = max(hub1.tail_base, hub2.tail_base, cross.tail_base)
    combined = SeriesEquation(coeffs, "combined-eliminated", tail_u, sigma)

    def rhs(lam: float, slack: int = 0) -> float:
        # slack +1/-1 shifts each input to its tail-certified extreme; the
        # branch value is increasing in the own-walk series and decreasing
        # in the cross series, so these are true two-sided root bounds.
        a = hub1.eval(lam) + slack * hub1.tail(lam)
        b = hub2.eval(lam) + slack * hub2.tail(lam)
        c = max(cross.eval(lam) - slack * cross.tail(lam), 0.0)
        disc = (a - b) ** 2 + 4 * c * c
        if disc < 0:
            raise BracketError("negative discriminant: inconsistent series")
        return 0.5 * ((a + b) - math.sqrt(disc))

    a0 = float(coeffs[0])
    if a0 <= 0:
        raise BracketError("combined series has nonpositive leading coefficient")
    lo = math.sqrt(a0)
    hi = math.sqrt(a0) + float(coeffs[1]) / a0 + 2.0 if order >= 1 else lo + 2.0
    root, _, _ = _bisect_equation(rhs, lo, hi)
    try:
        enc_lo = _bisect_equation(lambda x: rhs(x, -1), lo, hi)[1]
    except BracketError:
        enc_lo = lo
    try:
        enc_hi = _bisect_equation(lambda x: rhs(x, +1), lo, hi + 1.0)[2]
    except BracketError:
        enc_hi = hi
    return EliminationResult(combined, root, (enc_lo, enc_hi))


# ---------------------------------------------------------------------------
# root solving and comparison


@dataclass
class RootSolution:
    """Root of lambda^2 = series(lambda) with bisection and tail enclosures."""

    root: float
    lo: float
    hi: float
    tail_lo: float
    tail_hi: float
    bracket: tuple[float, float]


def _bisect_equation(rhs, lo: float, hi: float, tol: float = 1e-12):
    """Bisect h(lam) = lam^2 - rhs(lam) on [lo, hi]; h(lo) <= 0 < h(hi)."""

    def h(lam):
        return lam * lam - rhs(lam)

    hlo, hhi = h(lo), h(hi)
    if hlo > 0 or hhi <= 0:
        raise BracketError(f"no sign change on bracket [{lo}, {hi}]: "
                           f"h(lo)={hlo:.3e}, h(hi)={hhi:.3e}")
    a, b = lo, hi
    while b - a > tol * max(1.0, a):
        mid = 0.5 * (a + b)
        if h(mid) <= 0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b), a, b


def solve_char_equation(s: SeriesEquation, tol: float = 1e-12) -> RootSolution:
    """Certified root of lambda^2 = s(lambda) above sqrt(a_0).

    Brackets at [sqrt(a_0), sqrt(a_0) + a_1/a_0 + 2], checks h strictly
    increasing on a sample grid, bisects to ``tol``, and inflates the
    enclosure by the certified tail: any equation whose omitted terms stay
    within the tail bound has its root inside [tail_lo, tail_hi].
    """
    a0 = float(s.coeffs[0])
    if a0 <= 0:
        raise BracketError("need a positive leading coefficient")
    a1 = float(s.coeffs[1]) if s.order >= 1 else 0.0
    lo = math.sqrt(a0)
    hi = math.sqrt(a0) + a1 / a0 + 2.0
    if hi <= lo:
        hi = lo + 2.0
    # monotonicity spot-check of h(lam) = lam^2 - s(lam)
    for t in range(9):
        lam = lo + (hi - lo) * t / 8.0
        if lam <= s.tail_base:
            continue
        h_prime = 2.0 * lam - s.derivative_sup(max(lam * 0.999, lo), min(lam * 1.001, hi))
        if h_prime <= 0.0:
            raise BracketError(f"h not increasing near {lam:.6f}")
    root, lo_e, hi_e = _bisect_equation(s.eval, lo, hi, tol)
    tail_lo, tail_hi = lo_e, hi_e
    if s.tail_scale:
        # true rhs within [s - tail, s + tail]: bisect the two extreme curves
        try:
            tail_lo = _bisect_equation(lambda x: s.eval(x) - s.tail(x), lo, hi, tol)[1]
        except BracketError:
            tail_lo = lo
        try:
            tail_hi = _bisect_equation(lambda x: s.eval(x) + s.tail(x), lo,
                                       hi + s.tail(hi) + 1.0, tol)[2]
        except BracketError:
            tail_hi = hi + s.tail(hi) + 1.0
    return RootSolution(root, lo_e, hi_e, tail_lo, tail_hi, (lo, hi))


@dataclass
class RootExpansion:
    """Largest-root expansion lambda = sqrt(a0) + c1 + c2/sqrt(a0) + ..."""

    c1: float
    c2: float
    c3: float
    c4: float
    predicted: float


def expand_largest_root(coeffs) -> RootExpansion:
    """Closed-form four-term expansion of the largest root in 1/sqrt(a_0)."""
    cs = list(coeffs) + [0] * (5 - len(coeffs))
    a0 = Fraction(cs[0]) if not isinstance(cs[0], float) else cs[0]
    if a0 <= 0:
        raise ValueError("need a_0 > 0")
    a0, a1, a2, a3, a4 = (float(c) for c in cs[:5])
    r1 = a1 / a0
    r2 = a2 / a0
    r3 = a3 / a0
    r4 = a4 / a0
    c1 = r1 / 2
    c2 = -0.375 * r1 * r1 + 0.5 * r2
    c3 = r1**3 / 2 - r1 * r2 + r3 / 2
    c4 = (-105.0 / 128.0 * r1**4 + 35.0 / 16.0 * r1 * r1 * r2
          - 0.625 * r2 * r2 - 1.25 * r1 * r3 + 0.5 * r4)
    root = math.sqrt(a0)
    predicted = root + c1 + c2 / root + c3 / a0 + c4 / a0**1.5
    return RootExpansion(c1, c2, c3, c4, predicted)


@dataclass
class RootCertificate:
    """Outcome of a certified root comparison; never a wrong verdict.

    verdict 'greater' asserts the first root exceeds the second; 'undecided'
    carries the margin analysis.  With include_tails the verdict covers the
    true (untruncated) equations whose remainders obey the tail bounds; the
    tail-free variant orders the truncated equations' roots only.
    """

    verdict: str
    first: RootSolution
    second: RootSolution
    interval: tuple[float, float]
    min_difference: float
    tail_allowance: float
    include_tails: bool
    monotone: bool
    reason: str = ""


def compare_roots(f: SeriesEquation, g: SeriesEquation,
                  interval: tuple[float, float] | None = None,
                  include_tails: bool = True) -> RootCertificate:
    """Certified comparison of the roots of two series equations.

    The verdict is 'greater' (root of f above root of g) only when, over an
    interval containing both root enclosures, the pointwise difference f - g
    stays above the combined tail allowance and g is decreasing.  Root
    uniqueness on the interval follows from the monotonicity checks in
    solve_char_equation.
    """
    sf = solve_char_equation(f)
    sg = solve_char_equation(g)
    if include_tails:
        lo = min(sf.tail_lo, sg.tail_lo)
        hi = max(sf.tail_hi, sg.tail_hi)
    else:
        lo = min(sf.lo, sg.lo)
        hi = max(sf.hi, sg.hi)
    pad = 1e-9 * max(1.0, hi)
    lo -= pad
    hi += pad
    if interval is not None:
        if interval[0] > lo or interval[1] < hi:
            return RootCertificate("undecided", sf, sg, interval, 0.0, 0.0,
                                   include_tails, False,
                                   "supplied interval does not cover both root enclosures")
        lo, hi = interval
    sigma = max(f.tail_base if f.tail_scale else 0.0,
                g.tail_base if g.tail_scale else 0.0)
    if include_tails and lo <= sigma:
        return RootCertificate("undecided", sf, sg, (lo, hi), 0.0, math.inf,
                               include_tails, False,
                               "interval reaches the tail base; widen the series order")
    tail = (f.tail(lo) + g.tail(lo)) if include_tails else 0.0
    diff = SeriesEquation(tuple(Fraction(a) - Fraction(b) if not isinstance(a, float)
                                and not isinstance(b, float) else float(a) - float(b)
                                for a, b in zip(f.coeffs, g.coeffs)), "difference")
    min_diff = diff.range_min(lo, hi)
    g_slope = g.derivative_sup(lo, hi)
    if include_tails:
        g_slope += g.tail_derivative_bound(lo)
    monotone = g_slope < 0.0
    if min_diff > tail and monotone:
        return RootCertificate("greater", sf, sg, (lo, hi), min_diff, tail,
                               include_tails, monotone)
    reason = []
    if min_diff <= tail:
        reason.append(f"difference min {min_diff:.3e} within tail allowance {tail:.3e}")
    if not monotone:
        reason.append("could not certify the second series decreasing")
    return RootCertificate("undecided", sf, sg, (lo, hi), min_diff, tail,
                           include_tails, monotone, "; ".join(reason))
