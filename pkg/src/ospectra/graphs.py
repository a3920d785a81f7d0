"""Bitset graphs with exact walk, path, and cycle counting, plus graph6 I/O.

Vertices are labelled 0..n-1 and each adjacency row is stored as a Python int
whose bit v is set iff u ~ v.  Everything here is exact integer (or Fraction)
arithmetic; the dense floating-point machinery lives in :mod:`ospectra.eigen`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
INT64_MAX = 2**63 - 1


class MomentOverflowError(ArithmeticError):
    """A walk moment left the signed 64-bit range the format guarantees."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int] | int) -> int:
    """Accept either a bitmask or an iterable of vertex labels."""
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on at most 64 vertices."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def with_vertex(self, nbr_mask: int) -> "Graph":
        """Append vertex n adjacent to ``nbr_mask``."""
        new = self.n
        rows = [row | ((nbr_mask >> u & 1) << new) for u, row in enumerate(self.adj)]
        rows.append(nbr_mask)
        return Graph(self.n + 1, tuple(rows))

    def induced(self, keep: Iterable[int] | int) -> "Graph":
        """Induced subgraph on ``keep``, relabelled densely in increasing order."""
        keep_mask = mask_of(keep)
        old = list(bits(keep_mask))
        pos = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for w in bits(self.adj[v] & keep_mask):
                row |= 1 << pos[w]
            rows.append(row)
        return Graph(len(old), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image graph under vertex map u -> perm[u]."""
        rows = [0] * self.n
        for u in range(self.n):
            r = 0
            for v in bits(self.adj[u]):
                r |= 1 << perm[v]
            rows[perm[u]] = r
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        rows = list(self.adj) + [row << self.n for row in other.adj]
        return Graph(self.n + other.n, tuple(rows))


class LargeGraph:
    """Plain adjacency-list graph for spectral work beyond the bitset cap.

    Supports only what the dense eigensolver and series machinery need:
    neighborhoods, degrees, induced subgraphs and an adjacency matrix.  The
    bitset :class:`Graph` remains the type for exact combinatorics.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("need at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in adj)
        self.m = m

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other):
        return (isinstance(other, LargeGraph)
                and self.n == other.n and self.adj == other.adj)

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"LargeGraph(n={self.n}, m={self.m})"


def as_bitset_graph(g) -> Graph:
    """Convert to the bitset representation (must fit in 64 vertices)."""
    if isinstance(g, Graph):
        return g
    return Graph.from_edges(g.n, g.edges())


def make_graph(n: int, edges: Iterable[tuple[int, int]]):
    """Bitset Graph when it fits, LargeGraph otherwise."""
    if n <= MAX_VERTICES:
        return Graph.from_edges(n, edges)
    return LargeGraph(n, edges)


def connected(g: Graph) -> bool:
    return components(g)[0].bit_count() == g.n


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def biconnected_blocks(g: Graph) -> tuple[list[int], int]:
    """Blocks (as vertex bitmasks) and the bitmask of cut vertices.

    Iterative Tarjan lowpoint algorithm; isolated vertices form their own
    single-vertex blocks.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    blocks: list[int] = []
    cuts = 0
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            blocks.append(1 << root)
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, iter(bits(g.adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, iter(bits(g.adj[v]))))
                    advanced = True
                    break
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    block = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        block |= (1 << a) | (1 << b)
                        if (a, b) == (p, u):
                            break
                    blocks.append(block)
                    if p != root or root_children > 1:
                        cuts |= 1 << p
                    elif p == root and root_children > 1:
                        cuts |= 1 << p
    return blocks, cuts


# ---------------------------------------------------------------------------
# walk moments


@dataclass(frozen=True)
class WalkTable:
    """Exact moments M_i = 1_S^T A^i 1_T for i = 0..order."""

    source: int
    target: int
    order: int
    moments: tuple[int, ...]


def _check64(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise MomentOverflowError(f"moment {value} exceeds signed 64-bit range")
    return value


def walk_moments(g: Graph, source, target, order: int) -> WalkTable:
    """Count walks of each length 0..order from ``source`` to ``target``.

    The moment M_i equals the number of length-i walks starting in the source
    set and ending in the target set, computed by repeated integer
    matrix-vector products on the adjacency rows.
    """
    if order > 12:
        raise ValueError("walk moment order capped at 12")
    smask = mask_of(source)
    tmask = mask_of(target)
    vec = [tmask >> u & 1 for u in range(g.n)]
    moms = []
    for _ in range(order + 1):
        moms.append(_check64(sum(vec[u] for u in bits(smask))))
        vec = [_check64(sum(vec[w] for w in bits(g.adj[u]))) for u in range(g.n)]
    return WalkTable(smask, tmask, order, tuple(moms))


def signed_walk_moment(g, weights: Sequence, i: int) -> Fraction:
    """Exact rational w^T A^i w for a per-vertex weight vector.

    Accepts Graph or LargeGraph (the acceptance experiments run this on
    paths past the bitset cap).
    """
    if i > 12:
        raise ValueError("walk moment order capped at 12")
    if len(weights) != g.n:
        raise ValueError("weight vector length must equal vertex count")
    if isinstance(g, Graph):
        nbrs = [tuple(bits(row)) for row in g.adj]
    else:
        nbrs = list(g.adj)
    w = [Fraction(x) for x in weights]
    vec = list(w)
    for _ in range(i):
        vec = [sum((vec[x] for x in nbrs[u]), Fraction(0)) for u in range(g.n)]
    return sum((w[u] * vec[u] for u in range(g.n)), Fraction(0))


# ---------------------------------------------------------------------------
# bounded path counting


@dataclass(frozen=True)
class PathCounts:
    """Counts of u-v paths with 2, 3 and 4 edges (distinct vertices)."""

    u: int
    v: int
    h2: int
    h3: int
    h4: int


def count_paths(g: Graph, u: int, v: int, length: int) -> int:
    """Number of u-v paths with exactly ``length`` edges, internal vertices
    distinct and different from both endpoints.  Depth-limited DFS; only
    lengths 2..4 are supported."""
    if u == v:
        raise ValueError("endpoints must differ")
    if length not in (2, 3, 4):
        raise ValueError("path length must be 2, 3 or 4")
    target_bit = 1 << v
    count = 0
    stack = [(u, 1 << u, 0)]
    while stack:
        cur, visited, depth = stack.pop()
        row = g.adj[cur]
        if depth + 1 == length:
            if row & target_bit:
                count += 1
            continue
        for w in bits(row & ~visited & ~target_bit):
            stack.append((w, visited | (1 << w), depth + 1))
    return count


def path_counts(g: Graph, u: int, v: int) -> PathCounts:
    return PathCounts(u, v, count_paths(g, u, v, 2), count_paths(g, u, v, 3),
                      count_paths(g, u, v, 4))


def path_count_table(g: Graph, u: int, max_length: int = 4) -> list[list[int]]:
    """table[i][v] = number of u-v paths with i edges, for i = 0..max_length.

    One DFS enumerating every simple path out of u; much cheaper than calling
    count_paths per pair when all targets are needed.
    """
    table = [[0] * g.n for _ in range(max_length + 1)]
    table[0][u] = 1
    stack = [(u, 1 << u, 0)]
    while stack:
        cur, visited, depth = stack.pop()
        for w in bits(g.adj[cur] & ~visited):
            table[depth + 1][w] += 1
            if depth + 1 < max_length:
                stack.append((w, visited | (1 << w), depth + 1))
    return table


def triangles_at(g: Graph, u: int) -> int:
    """Number of triangles containing u."""
    row = g.adj[u]
    return sum((g.adj[v] & row).bit_count() for v in bits(row)) // 2


def four_cycles_at(g: Graph, u: int) -> int:
    """Number of 4-cycles containing u, each counted once."""
    nbrs = list(bits(g.adj[u]))
    total = 0
    for i, a in enumerate(nbrs):
        for c in nbrs[i + 1:]:
            total += (g.adj[a] & g.adj[c] & ~(1 << u)).bit_count()
    return total


# ---------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def graph6_encode(g) -> str:
    """Standard graph6 text encoding (upper triangle, column-major).

    Accepts Graph or LargeGraph.
    """
    if g.n <= 62:
        out = [chr(g.n + 63)]
    else:
        out = ["~", chr((g.n >> 12 & 63) + 63), chr((g.n >> 6 & 63) + 63),
               chr((g.n & 63) + 63)]
    if isinstance(g, Graph):
        rows = g.adj
    else:
        rows = [0] * g.n
        for u, v in g.edges():
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    buf = 0
    nbits = 0
    for j in range(1, g.n):
        col = rows[j]
        for i in range(j):
            buf = buf << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


MAX_DECODE_N = 4096


def graph6_decode(text: str):
    """Decode one graph6 line; raises Graph6Error on malformed input.

    Returns a Graph for n <= 64, a LargeGraph above that (up to 4096).
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("graph6 orders above 258047 not supported here")
        if len(s) < 4:
            raise Graph6Error("truncated graph6 order field")
        vals = [ord(c) - 63 for c in s[1:4]]
        if any(not 0 <= x <= 63 for x in vals):
            raise Graph6Error("invalid graph6 order field")
        n = vals[0] << 12 | vals[1] << 6 | vals[2]
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise Graph6Error(f"invalid graph6 order byte {s[0]!r}")
        body = s[1:]
    if n == 0 or n > MAX_DECODE_N:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_DECODE_N}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"graph6 body length {len(body)}, expected {need}")
    bitstream = 0
    for c in body:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"invalid graph6 body byte {c!r}")
        bitstream = bitstream << 6 | v
    pad = 6 * need - nbits
    if bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero trailing padding bits")
    bitstream >>= pad
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return make_graph(n, edges)


def read_graph6(text: str) -> list[Graph]:
    """Parse every non-empty line of a graph6 file body."""
    return [graph6_decode(line) for line in text.splitlines() if line.strip()]
