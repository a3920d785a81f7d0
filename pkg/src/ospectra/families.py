"""Deterministic builders for the named extremal graph families.

Labelling convention used throughout: within each component the hub comes
first, then its path vertices in path order; components are laid out
consecutively; auxiliary vertices (bridging apexes, cut centers) come last.
This keeps hub indices predictable for the walk-series machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, LargeGraph, make_graph


class FamilyParameterError(ValueError):
    """Requested family parameters are outside the family's validity range."""


def fan(n: int) -> Graph | LargeGraph:
    """Hub joined to every vertex of a path on n-1 vertices.

    Vertex 0 is the hub; 1..n-1 is the path.  Has 2n-3 edges for n >= 2.
    """
    if n < 2:
        raise FamilyParameterError("fan needs n >= 2")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    return make_graph(n, edges)


def _fan_edges(q: int, offset: int) -> list[tuple[int, int]]:
    e = [(offset, offset + i) for i in range(1, q)]
    e += [(offset + i, offset + i + 1) for i in range(1, q - 1)]
    return e


def bridged_double_fan(q: int) -> Graph | LargeGraph:
    """Two disjoint q-vertex fans joined by one edge between path endpoints.

    Component 1 occupies 0..q-1 (hub 0), component 2 occupies q..2q-1
    (hub q); the bridge joins the last path vertex of the first copy to the
    first path vertex of the second, both of which have the smallest degree
    in their fan.
    """
    if q < 3:
        raise FamilyParameterError("bridged double fan needs q >= 3")
    edges = _fan_edges(q, 0) + _fan_edges(q, q)
    edges.append((q - 1, q + 1))
    return make_graph(2 * q, edges)


def diamond_double_fan(n: int) -> Graph | LargeGraph:
    """Fans of floor(n/2) and ceil(n/2) vertices joined by two crossing edges.

    The first path vertex of the smaller fan is joined to the second path
    vertex of the larger one and vice versa, so the two crossing edges form
    a matching and the graph is 2-connected.
    """
    if n < 8:
        raise FamilyParameterError("diamond double fan needs n >= 8")
    qa = n // 2
    edges = _fan_edges(qa, 0) + _fan_edges(n - qa, qa)
    edges += [(1, qa + 2), (2, qa + 1)]
    return make_graph(n, edges)


def g0_prime(parity: str, n: int) -> Graph | LargeGraph:
    """The near-extremal 2-connected competitor with parallel crossing edges.

    Same two fans as :func:`diamond_double_fan`, but the crossing edges join
    first path vertex to first and second to second.  Parity is accepted
    explicitly so callers state their intent; it must match n.
    """
    if n < 10:
        raise FamilyParameterError("g0-prime needs n >= 10")
    if parity not in ("even", "odd"):
        raise FamilyParameterError("parity must be 'even' or 'odd'")
    if (n % 2 == 0) != (parity == "even"):
        raise FamilyParameterError(f"n={n} does not have parity {parity!r}")
    qa = n // 2
    edges = _fan_edges(qa, 0) + _fan_edges(n - qa, qa)
    edges += [(1, qa + 1), (2, qa + 2)]
    return make_graph(n, edges)


def fan_star(k: int, n: int) -> Graph | LargeGraph:
    """k fans hanging off one new center vertex.

    With n = kq + r (1 <= r <= k) this takes r-1 fans on q+1 vertices and
    k-r+1 fans on q vertices, then joins a fresh vertex (label n-1) to the
    last path vertex of every fan.  Deleting the center leaves the k fans.
    """
    if k < 2:
        raise FamilyParameterError("fan star needs k >= 2")
    if n < 2 * k + 1:
        raise FamilyParameterError(f"fan star needs n >= 2k+1 = {2 * k + 1}")
    q, extra = divmod(n - 1, k)
    sizes = [q + 1] * extra + [q] * (k - extra)
    assert sum(sizes) + 1 == n
    edges = []
    offset = 0
    center = n - 1
    for size in sizes:
        edges += _fan_edges(size, offset)
        edges.append((center, offset + size - 1))
        offset += size
    return make_graph(n, edges)


def cut_vertex_family(q: int, attach: tuple[tuple[int, ...], tuple[int, ...]]) -> Graph | LargeGraph:
    """Two q-vertex fans plus a center joined to 1-2 vertices of each fan.

    ``attach`` lists, per side, the local labels (0 = hub, 1..q-1 = path) the
    center vertex 2q connects to.  Outerplanarity of the result is the
    caller's responsibility to check; this builder only validates the
    attachment arity.
    """
    if q < 3:
        raise FamilyParameterError("cut vertex family needs q >= 3")
    if len(attach) != 2:
        raise FamilyParameterError("need attachment lists for both sides")
    edges = _fan_edges(q, 0) + _fan_edges(q, q)
    center = 2 * q
    for side, local in enumerate(attach):
        if not 1 <= len(local) <= 2 or len(set(local)) != len(local):
            raise FamilyParameterError("each side attaches 1 or 2 distinct vertices")
        for v in local:
            if not 0 <= v < q:
                raise FamilyParameterError(f"attachment {v} outside fan 0..{q - 1}")
            edges.append((center, side * q + v))
    return make_graph(2 * q + 1, edges)


def figure3_graph() -> Graph | LargeGraph:
    """The 12-vertex exception: two 5-vertex fans, each with an apex over
    the middle two path vertices, apexes joined by a bridge.

    Each side is the 6-vertex maximizer of the spectral radius, and deleting
    the apex bridge leaves the two copies; at 12 vertices this graph beats
    the bridged double fan.
    """
    side = 5  # per-component fan: hub + P4; apex is local vertex 5
    edges = []
    for s in range(2):
        off = s * (side + 1)
        edges += _fan_edges(side, off)
        apex = off + side
        edges += [(apex, off + 2), (apex, off + 3)]
    edges.append((side, 2 * side + 1))
    return make_graph(2 * side + 2, edges)


def triple_fan_chain(q: int) -> Graph | LargeGraph:
    """Three q-vertex fans chained by two edges.

    Each link joins the last path vertex (smallest degree) of one copy to the
    hub (largest degree) of the next; 3(2q-3)+2 edges on 3q vertices.  The
    precise link choice is one of several readings of the intended picture;
    alternatives can be generated via the search module.
    """
    if q < 3:
        raise FamilyParameterError("triple fan chain needs q >= 3")
    edges = _fan_edges(q, 0) + _fan_edges(q, q) + _fan_edges(q, 2 * q)
    edges += [(q - 1, q), (2 * q - 1, 2 * q)]
    return make_graph(3 * q, edges)


def triple_fan_star(q: int) -> Graph | LargeGraph:
    """Three q-vertex fans on a common center: fan_star(3, 3q+1)."""
    if q < 3:
        raise FamilyParameterError("triple fan star needs q >= 3")
    return fan_star(3, 3 * q + 1)


FAMILY_TAGS = (
    "fan",
    "bridged-double-fan",
    "diamond-double-fan",
    "fan-star",
    "cut-vertex-family",
    "figure3",
    "g0-prime-even",
    "g0-prime-odd",
    "triple-fan-chain",
    "triple-fan-star",
)


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family request, mostly for the CLI and search drivers."""

    tag: str
    n: int | None = None
    q: int | None = None
    k: int | None = None
    attach: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise FamilyParameterError(f"unknown family tag {self.tag!r}")


def build_family(spec: FamilySpec) -> Graph | LargeGraph:
    """Dispatch a FamilySpec to its builder."""
    tag = spec.tag
    if tag == "fan":
        return fan(_req(spec.n, "n"))
    if tag == "bridged-double-fan":
        return bridged_double_fan(_size_q(spec, even=True))
    if tag == "diamond-double-fan":
        return diamond_double_fan(_req(spec.n, "n"))
    if tag == "fan-star":
        return fan_star(_req(spec.k, "k"), _req(spec.n, "n"))
    if tag == "cut-vertex-family":
        if spec.attach is None:
            raise FamilyParameterError("cut-vertex-family needs attach lists")
        return cut_vertex_family(_size_q(spec, odd=True), spec.attach)
    if tag == "figure3":
        return figure3_graph()
    if tag == "g0-prime-even":
        return g0_prime("even", _req(spec.n, "n"))
    if tag == "g0-prime-odd":
        return g0_prime("odd", _req(spec.n, "n"))
    if tag == "triple-fan-chain":
        return triple_fan_chain(_size_q(spec, multiple=3))
    if tag == "triple-fan-star":
        return triple_fan_star(_size_q(spec, star3=True))
    raise AssertionError(tag)


def _req(value, name):
    if value is None:
        raise FamilyParameterError(f"missing parameter {name}")
    return value


def _size_q(spec: FamilySpec, even=False, odd=False, multiple=None, star3=False) -> int:
    """Resolve q from either an explicit q or a total vertex count n."""
    if spec.q is not None:
        return spec.q
    n = _req(spec.n, "n or q")
    if even:
        if n % 2:
            raise FamilyParameterError("this family needs even n = 2q")
        return n // 2
    if odd:
        if n % 2 == 0:
            raise FamilyParameterError("this family needs odd n = 2q+1")
        return n // 2
    if multiple:
        if n % multiple:
            raise FamilyParameterError(f"this family needs n divisible by {multiple}")
        return n // multiple
    if star3:
        if n % 3 != 1:
            raise FamilyParameterError("triple fan star needs n = 3q+1")
        return n // 3
    raise AssertionError
