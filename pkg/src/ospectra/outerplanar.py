"""Outerplanarity decisions with independently checkable certificates.

A graph is outerplanar iff it has a circular vertex order with no two edges
crossing, iff it excludes K4 and K2,3 as minors, iff the cone over it (a new
apex joined to every vertex) is planar.  The fast path here tests cone
planarity with an iterative face-embedding procedure and reads the outer
cyclic order off the rotation around the apex.  The slow path searches for a
K4 or K2,3 subdivision (equivalent to a minor for these patterns, whose
maximum degree is 3) and returns explicit branch sets.  The two routes are
cross-validated exhaustively in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits

MINOR_MAX_N = 24


class MinorSearchBudgetError(RuntimeError):
    """The branch-set search exceeded its node budget."""


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets (vertex bitmasks) realizing a forbidden minor."""

    pattern: str  # "K4" or "K23"
    branch_sets: tuple[int, ...]


@dataclass(frozen=True)
class OuterplanarityCertificate:
    outerplanar: bool
    order: tuple[int, ...] | None  # cyclic outer-face order when yes
    witness: MinorWitness | None   # forbidden-minor branch sets when no


def _rows_of(g) -> list[int]:
    """Adjacency bit rows for Graph or LargeGraph (unbounded Python ints)."""
    if isinstance(g, Graph):
        return list(g.adj)
    rows = [0] * g.n
    for u, v in g.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _row_components(n: int, rows: list[int]) -> list[int]:
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


# ---------------------------------------------------------------------------
# planarity of the cone (fast decision + embedding)


def _find_cycle(n: int, rows: list[int]) -> list[int]:
    """Some cycle of a graph that has one (DFS back edge)."""
    color = [0] * n
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(bits(rows[root])))]
        color[root] = 1
        path = [root]
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if color[v] == 0:
                    color[v] = 1
                    parent[v] = u
                    stack.append((v, iter(bits(rows[v]))))
                    path.append(v)
                    advanced = True
                    break
                elif v != parent[u] and color[v] == 1:
                    return path[path.index(v):]
            if not advanced:
                stack.pop()
                path.pop()
                color[u] = 2
    raise ValueError("acyclic graph passed to cycle finder")


def _demoucron_faces(n: int, rows: list[int], m: int) -> list[list[int]] | None:
    """Faces of a planar embedding of a 2-connected graph, or None.

    Iterative face embedding: start from any cycle, then repeatedly choose a
    bridge (an unembedded chord, or a component of the unembedded part with
    its attachment edges), place a path of it across an admissible face, and
    split that face.  A bridge with no admissible face proves nonplanarity;
    one with a unique admissible face is forced; when every bridge has two
    or more admissible faces, any placement extends to an embedding.
    """
    if n >= 3 and m > 3 * n - 6:
        return None
    cycle = _find_cycle(n, rows)
    in_h = 0
    for v in cycle:
        in_h |= 1 << v
    embedded: set[frozenset[int]] = set()
    for i, v in enumerate(cycle):
        embedded.add(frozenset((v, cycle[(i + 1) % len(cycle)])))
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]
    remaining = m - len(cycle)

    while remaining > 0:
        face_sets = [frozenset(f) for f in faces]
        best = None  # (n_admissible, face_idx, alpha, beta, interior)
        blocked = False

        def consider(alpha, beta, interior, attachments):
            nonlocal best, blocked
            admissible = [i for i, fs in enumerate(face_sets) if attachments <= fs]
            if not admissible:
                blocked = True
                return
            if best is None or len(admissible) < best[0]:
                best = (len(admissible), admissible[0], alpha, beta, interior)

        # chord bridges
        for u in bits(in_h):
            for v in bits(rows[u] & in_h):
                if u < v and frozenset((u, v)) not in embedded:
                    consider(u, v, [], frozenset((u, v)))
                    if blocked or (best and best[0] == 1):
                        break
            if blocked or (best and best[0] == 1):
                break
        # component bridges
        if not blocked and not (best and best[0] == 1):
            outside = ((1 << n) - 1) & ~in_h
            seen = 0
            for s in bits(outside):
                if seen >> s & 1:
                    continue
                comp = 1 << s
                frontier = comp
                while frontier:
                    nxt = 0
                    for u in bits(frontier):
                        nxt |= rows[u] & outside
                    frontier = nxt & ~comp
                    comp |= nxt
                seen |= comp
                attach = 0
                for u in bits(comp):
                    attach |= rows[u] & in_h
                alpha = next(bits(attach))
                par: dict[int, int] = {}
                queue = []
                for w in bits(rows[alpha] & comp):
                    par[w] = alpha
                    queue.append(w)
                beta = None
                end = None
                for w in queue:
                    hit = rows[w] & attach & ~(1 << alpha)
                    if hit:
                        beta = next(bits(hit))
                        end = w
                        break
                    for x in bits(rows[w] & comp):
                        if x not in par:
                            par[x] = w
                            queue.append(x)
                assert beta is not None, "bridge with one attachment in a 2-connected graph"
                interior = []
                w = end
                while w != alpha:
                    interior.append(w)
                    w = par[w]
                interior.reverse()
                consider(alpha, beta, interior, frozenset(bits(attach)))
                if blocked or (best and best[0] == 1):
                    break
        if blocked:
            return None
        assert best is not None
        _, fidx, alpha, beta, interior = best
        face = faces[fidx]
        i, j = face.index(alpha), face.index(beta)
        if i <= j:
            arc1 = face[i:j + 1]
            arc2 = face[j:] + face[:i + 1]
        else:
            arc1 = face[i:] + face[:j + 1]
            arc2 = face[j:i + 1]
        faces[fidx] = arc1 + list(reversed(interior))
        faces.append(arc2 + list(interior))
        chain = [alpha] + interior + [beta]
        for a, b in zip(chain, chain[1:]):
            embedded.add(frozenset((a, b)))
        remaining -= len(chain) - 1
        for v in interior:
            in_h |= 1 << v
    return faces


def _apex_rotation(faces: list[list[int]], apex: int, nbr_count: int) -> list[int]:
    """Cyclic neighbor order around the apex, read off the incident faces."""
    partners: dict[int, list[int]] = {}
    for f in faces:
        if apex in f:
            i = f.index(apex)
            a, b = f[i - 1], f[(i + 1) % len(f)]
            partners.setdefault(a, []).append(b)
            partners.setdefault(b, []).append(a)
    start = min(partners)
    order = [start]
    prev = None
    while len(order) < nbr_count:
        cands = partners[order[-1]]
        nxt = cands[0] if cands[0] != prev else cands[1]
        prev = order[-1]
        order.append(nxt)
    return order


def _forest_preorder(n: int, rows: list[int]) -> list[int]:
    """DFS preorder places forest vertices with no edge crossings."""
    order = []
    seen = 0
    for root in range(n):
        if seen >> root & 1:
            continue
        stack = [root]
        seen |= 1 << root
        while stack:
            u = stack.pop()
            order.append(u)
            for v in bits(rows[u] & ~seen):
                seen |= 1 << v
                stack.append(v)
    return order


def _component_outer_order(n: int, rows: list[int], m: int) -> list[int] | None:
    """Outer cyclic order for one connected graph, or None if not outerplanar."""
    if n <= 2:
        return list(range(n))
    if m > 2 * n - 3:
        return None
    ncomp = len(_row_components(n, rows))
    if m == n - ncomp:  # forest
        return _forest_preorder(n, rows)
    cone_rows = [row | (1 << n) for row in rows]
    cone_rows.append((1 << n) - 1)
    faces = _demoucron_faces(n + 1, cone_rows, m + n)
    if faces is None:
        return None
    return _apex_rotation(faces, n, n)


def is_outerplanar(g, want_witness: bool = False,
                   budget: int = 20_000_000) -> OuterplanarityCertificate:
    """Decide outerplanarity; optionally attach a forbidden-minor witness.

    The yes-certificate is a cyclic order of all vertices with no crossing
    chords (components concatenated).  The no-certificate carries branch sets
    for a K4 or K2,3 minor when ``want_witness`` is set; finding one costs an
    exponential search (capped at 24 vertices) and is skipped otherwise.
    Accepts Graph or LargeGraph.
    """
    rows = _rows_of(g)
    n = g.n
    order: list[int] = []
    for comp in _row_components(n, rows):
        verts = list(bits(comp))
        pos = {v: i for i, v in enumerate(verts)}
        sub_rows = []
        sub_m = 0
        for v in verts:
            r = 0
            for w in bits(rows[v] & comp):
                r |= 1 << pos[w]
            sub_rows.append(r)
            sub_m += r.bit_count()
        sub_m //= 2
        comp_order = _component_outer_order(len(verts), sub_rows, sub_m)
        if comp_order is None:
            witness = None
            if want_witness:
                witness = find_minor(g, "K4", budget) or find_minor(g, "K23", budget)
                assert witness is not None, "non-outerplanar graph must contain K4 or K23"
            return OuterplanarityCertificate(False, None, witness)
        order.extend(verts[v] for v in comp_order)
    return OuterplanarityCertificate(True, tuple(order), None)


# ---------------------------------------------------------------------------
# forbidden minor search (oracle)

_PATTERNS = {
    # branch vertex degree needs, interchangeable groups, required pattern edges
    "K4": ((3, 3, 3, 3), ((0, 1, 2, 3),),
           ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    "K23": ((3, 3, 2, 2, 2), ((0, 1), (2, 3, 4)),
            ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
}


def find_minor(g, pattern: str, budget: int = 20_000_000) -> MinorWitness | None:
    """Exhaustive search for a K4 or K2,3 minor; None proves absence.

    Both patterns have maximum degree 3, so a minor exists iff a subdivision
    does: the search places branch vertices, then internally disjoint paths
    for every pattern edge.  Runs per biconnected block, since both patterns
    are 2-connected.
    """
    if pattern not in _PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected 'K4' or 'K23'")
    if g.n > MINOR_MAX_N:
        raise ValueError(f"minor search capped at {MINOR_MAX_N} vertices")
    from .graphs import as_bitset_graph, biconnected_blocks

    gb = as_bitset_graph(g)
    degs, groups, pairs = _PATTERNS[pattern]
    k = len(degs)
    state = {"nodes": 0, "budget": budget}
    blocks, _ = biconnected_blocks(gb)
    for block in blocks:
        if block.bit_count() < k:
            continue
        verts = list(bits(block))
        sub = gb.induced(block)
        hit = _find_subdivision(sub, degs, groups, pairs, state)
        if hit is not None:
            branch, paths = hit
            sets = [1 << b for b in branch]
            for (i, _j), interior in zip(pairs, paths):
                for v in interior:
                    sets[i] |= 1 << v
            glob = [sum(1 << verts[v] for v in bits(s)) for s in sets]
            return MinorWitness(pattern, tuple(glob))
    return None


def _find_subdivision(g: Graph, degs, groups, pairs, state):
    candidates = [[v for v in range(g.n) if g.degree(v) >= degs[i]]
                  for i in range(len(degs))]
    if any(not c for c in candidates):
        return None
    branch = [-1] * len(degs)

    def place(i, used):
        state["nodes"] += 1
        if state["nodes"] > state["budget"]:
            raise MinorSearchBudgetError(f"minor search exceeded {state['budget']} nodes")
        if i == len(degs):
            return _route_paths(g, branch, pairs, 0, used, [], state)
        group = next(gr for gr in groups if i in gr)
        lo = branch[i - 1] + 1 if i > 0 and (i - 1) in group else 0
        for v in candidates[i]:
            if v < lo or used >> v & 1:
                continue
            branch[i] = v
            found = place(i + 1, used | (1 << v))
            if found is not None:
                return found
        branch[i] = -1
        return None

    return place(0, 0)


def _route_paths(g: Graph, branch, pairs, idx, used, interiors, state):
    """Assign internally disjoint paths for the remaining pattern edges."""
    if idx == len(pairs):
        return list(branch), [list(p) for p in interiors]
    x, y = branch[pairs[idx][0]], branch[pairs[idx][1]]
    ybit = 1 << y

    def walk(cur, interior, used_now):
        state["nodes"] += 1
        if state["nodes"] > state["budget"]:
            raise MinorSearchBudgetError(f"minor search exceeded {state['budget']} nodes")
        if g.adj[cur] & ybit:
            interiors.append(interior)
            found = _route_paths(g, branch, pairs, idx + 1, used_now, interiors, state)
            if found is not None:
                return found
            interiors.pop()
        for w in bits(g.adj[cur] & ~used_now & ~ybit):
            found = walk(w, interior + [w], used_now | (1 << w))
            if found is not None:
                return found
        return None

    return walk(x, [], used)


# ---------------------------------------------------------------------------
# certificate validation (independent of both decision routes)


def validate_certificate(g, cert: OuterplanarityCertificate) -> bool:
    """Re-check a certificate from first principles.

    Yes: the cyclic order must list every vertex once and no two edges may
    interleave around the circle.  No: the branch sets must be nonempty,
    disjoint, each connected, and carry every super-edge of the pattern.
    A no-certificate without a witness cannot be validated and returns False.
    """
    if cert.outerplanar:
        if cert.order is None or sorted(cert.order) != list(range(g.n)):
            return False
        pos = [0] * g.n
        for i, v in enumerate(cert.order):
            pos[v] = i
        edges = g.edges()
        for i, (u1, v1) in enumerate(edges):
            a, b = sorted((pos[u1], pos[v1]))
            for u2, v2 in edges[i + 1:]:
                c, d = sorted((pos[u2], pos[v2]))
                if len({a, b, c, d}) == 4 and (a < c < b < d or c < a < d < b):
                    return False
        return True

    if cert.witness is None:
        return False
    rows = _rows_of(g)
    degs, _groups, pairs = _PATTERNS[cert.witness.pattern]
    sets = cert.witness.branch_sets
    if len(sets) != len(degs):
        return False
    union = 0
    for s in sets:
        if s == 0 or s & union or s & ~((1 << g.n) - 1):
            return False
        union |= s
        if not _connected_in(rows, s):
            return False
    for i, j in pairs:
        if not _touches(rows, sets[i], sets[j]):
            return False
    return True


def _connected_in(rows: list[int], mask: int) -> bool:
    start = 1 << next(bits(mask))
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u] & mask
        frontier = nxt & ~comp
        comp |= nxt
    return comp == mask


def _touches(rows: list[int], a: int, b: int) -> bool:
    return any(rows[u] & b for u in bits(a))
