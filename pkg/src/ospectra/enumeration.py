"""Canonical forms and exhaustive generation of small outerplanar graphs.

Canonical labeling is color refinement plus individualization backtracking,
with an interchangeable-cell shortcut that keeps stars and cliques from
exploding the search.  Generation is vertex augmentation with canonical-form
deduplication per level; outerplanarity prunes immediately because the class
is closed under induced subgraphs.  A brute-force labeled generator (with
the minor-based outerplanarity decision) cross-checks the counts at small
orders.
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path
from typing import Iterator, Sequence

from .graphs import Graph, bits, connected, graph6_decode, graph6_encode
from .outerplanar import find_minor, is_outerplanar

EXHAUSTIVE_DEFAULT_CAP = 11


class EnumerationBudgetError(RuntimeError):
    """Requested order exceeds the resource guard; carries a resume hint."""

    def __init__(self, message: str, resume_level: int | None = None,
                 checkpoint: str | None = None):
        super().__init__(message)
        self.resume_level = resume_level
        self.checkpoint = checkpoint


# ---------------------------------------------------------------------------
# canonical labeling


def _refine(g: Graph, colors: Sequence[int]) -> tuple[int, ...]:
    col = tuple(colors)
    ncell = len(set(col))
    while True:
        sig = [(col[v], tuple(sorted(col[w] for w in bits(g.adj[v]))))
               for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        col = tuple(ranks[s] for s in sig)
        if len(set(col)) == ncell:
            return col
        ncell = len(set(col))


def _interchangeable(g: Graph, cell: list[int]) -> bool:
    """Cell vertices are mutually swappable: identical outside-neighborhoods
    and trivially structured (empty or complete) inside the cell."""
    mask = 0
    for v in cell:
        mask |= 1 << v
    outside = {g.adj[v] & ~mask for v in cell}
    if len(outside) != 1:
        return False
    inside = [g.adj[v] & mask for v in cell]
    empty = all(x == 0 for x in inside)
    full = all(inside[i] == mask ^ (1 << v) for i, v in enumerate(cell))
    return empty or full


def _leaf_key(g: Graph, col: tuple[int, ...], base: Sequence[int]) -> bytes:
    order = sorted(range(g.n), key=lambda v: col[v])
    perm = [0] * g.n
    for rank, v in enumerate(order):
        perm[v] = rank
    rows = [0] * g.n
    for u in range(g.n):
        r = 0
        for w in bits(g.adj[u]):
            r |= 1 << perm[w]
        rows[perm[u]] = r
    colors_part = bytes(base[v] & 0xFF for v in order)
    adj_part = b"".join(r.to_bytes(8, "little") for r in rows)
    return colors_part + adj_part


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Isomorphism-invariant key; colored vertices may only map to the same
    color.  canonical_form(g) == canonical_form(h) iff g and h are
    isomorphic (color-preservingly when colors are given)."""
    base = tuple(colors) if colors is not None else (0,) * g.n
    best: list[bytes | None] = [None]

    def search(col: tuple[int, ...]):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(col):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            key = _leaf_key(g, col, base)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        branch = [target[0]] if _interchangeable(g, target) else target
        for v in branch:
            nxt = list(col)
            nxt[v] = -1  # split v below its cell
            search(_refine(g, nxt))

    search(_refine(g, base))
    assert best[0] is not None
    return best[0]


def canonical_relabel(g: Graph) -> tuple[Graph, list[int]]:
    """Canonically relabeled copy plus the permutation used (v -> new label)."""
    best: list[tuple[bytes, list[int]] | None] = [None]

    def search(col: tuple[int, ...]):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(col):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(g.n), key=lambda v: col[v])
            perm = [0] * g.n
            for rank, v in enumerate(order):
                perm[v] = rank
            key = _leaf_key(g, col, (0,) * g.n)
            if best[0] is None or key < best[0][0]:
                best[0] = (key, perm)
            return
        branch = [target[0]] if _interchangeable(g, target) else target
        for v in branch:
            nxt = list(col)
            nxt[v] = -1
            search(_refine(g, nxt))

    search(_refine(g, (0,) * g.n))
    assert best[0] is not None
    perm = best[0][1]
    return g.relabel(perm), perm


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_relabel(g)[0])


# ---------------------------------------------------------------------------
# linear-forest neighborhoods (augmentation pruning)


def _mask_connected_between(g: Graph, mask: int, a: int, b: int) -> bool:
    comp = 1 << a
    frontier = comp
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u] & mask
        frontier = nxt & ~comp
        comp |= nxt
    return bool(comp >> b & 1)


def _linear_forest_subsets(g: Graph, nonempty: bool) -> Iterator[int]:
    """Vertex subsets inducing a linear forest (valid new-vertex
    neighborhoods in an outerplanar graph).  Prefix pruning is exact because
    linear forests are hereditary."""
    n = g.n

    def can_add(mask: int, v: int) -> bool:
        nb = g.adj[v] & mask
        c = nb.bit_count()
        if c > 2:
            return False
        for w in bits(nb):
            if (g.adj[w] & mask).bit_count() >= 2:
                return False
        if c == 2:
            it = bits(nb)
            a, b = next(it), next(it)
            if _mask_connected_between(g, mask, a, b):
                return False
        return True

    def rec(idx: int, mask: int) -> Iterator[int]:
        if idx == n:
            if mask or not nonempty:
                yield mask
            return
        yield from rec(idx + 1, mask)
        if can_add(mask, idx):
            yield from rec(idx + 1, mask | (1 << idx))

    yield from rec(0, 0)


# ---------------------------------------------------------------------------
# generation


_ENUM_CACHE: dict[tuple[int, bool], list[Graph]] = {}


def enumerate_outerplanar(n: int, connected_only: bool = True,
                          max_n: int = EXHAUSTIVE_DEFAULT_CAP,
                          checkpoint: str | None = None) -> list[Graph]:
    """All outerplanar graphs on n vertices, one canonical representative
    per isomorphism class, sorted by canonical graph6 string.

    Every emitted graph is certified outerplanar by construction (each
    augmentation is re-checked).  Orders beyond ``max_n`` raise
    EnumerationBudgetError; a checkpoint file makes long runs resumable.
    Checkpoint-free results are cached per process (graphs are immutable).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > max_n:
        raise EnumerationBudgetError(
            f"exhaustive enumeration capped at {max_n} (asked {n}); "
            "raise max_n explicitly to proceed", resume_level=None,
            checkpoint=checkpoint)
    if checkpoint is None and (n, connected_only) in _ENUM_CACHE:
        return list(_ENUM_CACHE[n, connected_only])
    level = [Graph(1, (0,))]
    start = 2
    if checkpoint and Path(checkpoint).exists():
        # newline-delimited JSON: one record per completed level; resume
        # from the deepest matching one
        for line in Path(checkpoint).read_text().splitlines():
            if not line.strip():
                continue
            data = json.loads(line)
            if (data.get("connected_only") == connected_only
                    and data.get("target") == n
                    and start <= data["level"] + 1 <= n):
                level = [graph6_decode(s) for s in data["graphs"]]
                start = data["level"] + 1
    elif checkpoint is None:
        for k in range(n - 1, 1, -1):
            if (k, connected_only) in _ENUM_CACHE:
                level = list(_ENUM_CACHE[k, connected_only])
                start = k + 1
                break
    for k in range(start, n + 1):
        seen: set[str] = set()
        out: list[Graph] = []
        max_m = 2 * k - 3
        for parent in level:
            for smask in _linear_forest_subsets(parent, nonempty=connected_only):
                if parent.m + smask.bit_count() > max_m:
                    continue
                child = parent.with_vertex(smask)
                if not is_outerplanar(child).outerplanar:
                    continue
                canon, _ = canonical_relabel(child)
                key = graph6_encode(canon)
                if key not in seen:
                    seen.add(key)
                    out.append(canon)
        level = out
        if checkpoint:
            with open(checkpoint, "a") as fh:
                fh.write(json.dumps({
                    "target": n, "connected_only": connected_only, "level": k,
                    "graphs": [graph6_encode(x) for x in level]}) + "\n")
        elif k < n:
            _ENUM_CACHE[k, connected_only] = sorted(level, key=graph6_encode)
    result = sorted(level, key=graph6_encode)
    if checkpoint is None:
        _ENUM_CACHE[n, connected_only] = list(result)
    return result


def enumerate_all_graphs(n: int, max_n: int = 8) -> list[Graph]:
    """Every graph on n vertices up to isomorphism (no planarity filter)."""
    if n > max_n:
        raise EnumerationBudgetError(f"all-graphs enumeration capped at {max_n}")
    level = [Graph(1, (0,))]
    for k in range(2, n + 1):
        seen: set[bytes] = set()
        out = []
        for parent in level:
            for smask in range(1 << (k - 1)):
                child = parent.with_vertex(smask)
                canon, _ = canonical_relabel(child)
                key = graph6_encode(canon)
                if key not in seen:
                    seen.add(key)
                    out.append(canon)
        level = out
    return sorted(level, key=graph6_encode)


def brute_force_outerplanar(n: int, connected_only: bool = True) -> list[Graph]:
    """Independent oracle: all labeled graphs on n vertices, filtered by the
    minor-based outerplanarity decision, deduplicated canonically.

    Exponential in n^2; intended for n <= 6.
    """
    if n > 6:
        raise EnumerationBudgetError("brute-force oracle capped at 6 vertices")
    pairs = list(combinations(range(n), 2))
    seen: set[str] = set()
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        if mask.bit_count() > max(2 * n - 3, 0):
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if connected_only and not connected(g):
            continue
        if find_minor(g, "K4") is not None or find_minor(g, "K23") is not None:
            continue
        canon, _ = canonical_relabel(g)
        key = graph6_encode(canon)
        if key not in seen:
            seen.add(key)
            out.append(canon)
    return sorted(out, key=graph6_encode)
