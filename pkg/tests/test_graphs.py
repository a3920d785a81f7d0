"""Graph core: bitset type, exact counting, graph6."""

import random
from fractions import Fraction

import pytest

from ospectra.graphs import (Graph, Graph6Error, MomentOverflowError, PathCounts,
                             biconnected_blocks, bits, components, connected,
                             count_paths, four_cycles_at, graph6_decode,
                             graph6_encode, make_graph, path_count_table,
                             path_counts, signed_walk_moment, triangles_at,
                             walk_moments)


def path(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestGraphType:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10,))  # row count mismatch
        with pytest.raises(ValueError):
            Graph(1, (1,))     # loop
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))  # asymmetric
        with pytest.raises(ValueError):
            Graph(65, tuple([0] * 65))
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])

    def test_basics(self):
        g = cycle(5)
        assert g.m == 5
        assert g.degrees() == [2] * 5
        assert g.neighbors(0) == (1, 4)
        assert g.has_edge(0, 4) and not g.has_edge(0, 2)
        assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

    def test_induced_and_relabel(self):
        g = complete(4)
        sub = g.induced([0, 2, 3])
        assert sub.n == 3 and sub.m == 3
        perm = [2, 0, 1, 3]
        h = g.relabel(perm)
        assert h == g  # complete graph is relabeling-invariant

    def test_with_vertex(self):
        g = path(3).with_vertex(0b101)
        assert g.n == 4
        assert g.has_edge(3, 0) and g.has_edge(3, 2) and not g.has_edge(3, 1)

    def test_components(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        comps = components(g)
        assert len(comps) == 3
        assert not connected(g)
        assert connected(path(5))

    def test_blocks_and_cuts(self):
        # two triangles sharing a vertex: one cut vertex, two blocks
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        blocks, cuts = biconnected_blocks(g)
        assert len(blocks) == 2
        assert cuts == 1 << 2
        blocks, cuts = biconnected_blocks(cycle(6))
        assert len(blocks) == 1 and cuts == 0

    def test_cut_vertices_vs_deletion_oracle(self):
        rng = random.Random(6)
        for _ in range(60):
            n = rng.randint(2, 12)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.3]
            g = Graph.from_edges(n, edges)
            _, cuts = biconnected_blocks(g)
            base = len(components(g))
            for v in range(n):
                keep = [u for u in range(n) if u != v]
                sub = g.induced(keep)
                is_cut = len(components(sub)) > base - (1 if g.degree(v) == 0 else 0)
                assert bool(cuts >> v & 1) == is_cut, (edges, v)


class TestWalkMoments:
    def test_edge_count_moment(self):
        g = path(8)
        t = walk_moments(g, range(8), range(8), 1)
        assert t.moments[0] == 8
        assert t.moments[1] == 14  # twice the edge count

    def test_degree_square_moment(self):
        for n in (6, 9, 13):
            g = path(n - 1)  # path on n-1 vertices
            t = walk_moments(g, range(n - 1), range(n - 1), 2)
            assert t.moments[2] == 4 * n - 10

    def test_common_neighbors(self):
        t = walk_moments(cycle(4), [0], [2], 2)
        assert t.moments[2] == 2

    def test_m0_is_intersection(self):
        g = cycle(6)
        t = walk_moments(g, [0, 1, 2], [2, 3], 0)
        assert t.moments[0] == 1

    def test_dense_oracle(self):
        # bitset products equal dense integer matrix powers
        rng = random.Random(1)
        for _ in range(40):
            n = rng.randint(2, 8)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            a = [[1 if g.has_edge(u, v) else 0 for v in range(n)] for u in range(n)]
            power = [[1 if u == v else 0 for v in range(n)] for u in range(n)]
            s = rng.randrange(1, 1 << n)
            t = rng.randrange(1, 1 << n)
            table = walk_moments(g, s, t, 5)
            for i in range(6):
                expect = sum(power[u][v]
                             for u in bits(s) for v in bits(t))
                assert table.moments[i] == expect
                power = [[sum(power[u][w] * a[w][v] for w in range(n))
                          for v in range(n)] for u in range(n)]

    def test_overflow_guard(self):
        g = complete(64)
        with pytest.raises(MomentOverflowError):
            walk_moments(g, range(64), range(64), 12)

    def test_order_cap(self):
        with pytest.raises(ValueError):
            walk_moments(path(4), [0], [1], 13)


class TestSignedMoments:
    def test_zero_vector(self):
        assert signed_walk_moment(cycle(5), [0] * 5, 3) == 0

    def test_split_path_small(self):
        g = path(8)
        w = [1] * 4 + [-1] * 4
        assert signed_walk_moment(g, w, 1) == 10
        assert signed_walk_moment(g, w, 2) == 18
        # the deepest moment at q=5 precedes the linear regime: the value is
        # 56, not 64*5 - 272 = 48 (the linear forms need q >= 6)
        assert signed_walk_moment(g, w, 5) == 56

    @pytest.mark.parametrize("q", [6, 10, 25, 50])
    def test_split_path_linear_forms(self, q):
        g = path(2 * q - 2)
        w = [1] * (q - 1) + [-1] * (q - 1)
        expect = [2 * q - 2, 4 * q - 10, 8 * q - 22, 16 * q - 56,
                  32 * q - 118, 64 * q - 272]
        assert [signed_walk_moment(g, w, i) for i in range(6)] == expect

    def test_rational_weights(self):
        g = path(3)
        w = [Fraction(1, 2), Fraction(1, 3), Fraction(-1, 5)]
        # w^T A w = 2*(w0 w1 + w1 w2)
        assert signed_walk_moment(g, w, 1) == 2 * (Fraction(1, 6) - Fraction(1, 15))


class TestPathCounts:
    def test_examples(self):
        assert count_paths(cycle(4), 0, 2, 2) == 2
        assert count_paths(complete(4), 0, 1, 3) == 2
        assert count_paths(path(5), 0, 4, 4) == 1

    def test_rejects_equal_endpoints(self):
        with pytest.raises(ValueError):
            count_paths(path(3), 1, 1, 2)

    def test_h2_equals_walks(self):
        rng = random.Random(2)
        for _ in range(40):
            n = rng.randint(3, 9)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.45]
            g = Graph.from_edges(n, edges)
            for u in range(n):
                for v in range(n):
                    if u == v:
                        continue
                    w2 = walk_moments(g, [u], [v], 2).moments[2]
                    assert count_paths(g, u, v, 2) == w2
                    w3 = walk_moments(g, [u], [v], 3).moments[3]
                    assert count_paths(g, u, v, 3) <= w3

    def test_h3_formula_oracle(self):
        # paths of length 3 = walks minus the backtracking ones
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(3, 9)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            for u in range(n):
                for v in range(n):
                    if u == v:
                        continue
                    w3 = walk_moments(g, [u], [v], 3).moments[3]
                    adj = 1 if g.has_edge(u, v) else 0
                    expect = w3 - adj * (g.degree(u) + g.degree(v) - 1)
                    assert count_paths(g, u, v, 3) == expect

    def test_table_matches_single_counts(self):
        rng = random.Random(4)
        for _ in range(20):
            n = rng.randint(3, 9)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.4]
            g = Graph.from_edges(n, edges)
            for u in range(n):
                table = path_count_table(g, u, 4)
                for v in range(n):
                    if v == u:
                        continue
                    for i in (2, 3, 4):
                        assert table[i][v] == count_paths(g, u, v, i)

    def test_path_counts_record(self):
        # the two arcs of the 5-cycle give one path of each length 2 and 3
        pc = path_counts(cycle(5), 0, 2)
        assert pc == PathCounts(0, 2, 1, 1, 0)


class TestLocalCycleCounts:
    def test_triangles(self):
        assert triangles_at(complete(3), 0) == 1
        assert triangles_at(complete(4), 0) == 3
        from ospectra.families import fan

        assert triangles_at(fan(5), 0) == 3

    def test_four_cycles(self):
        assert four_cycles_at(cycle(4), 0) == 1
        assert four_cycles_at(complete(4), 0) == 3
        assert four_cycles_at(cycle(5), 0) == 0


class TestGraph6:
    def test_known_encodings(self):
        assert graph6_encode(Graph.from_edges(2, [(0, 1)])) == "A_"
        assert graph6_decode("A?").m == 0
        assert graph6_decode("A_").m == 1

    def test_header_stripping(self):
        assert graph6_decode(">>graph6<<A_").m == 1

    def test_roundtrip_random(self):
        rng = random.Random(5)
        for _ in range(1000):
            n = rng.randint(1, 60)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.3]
            g = Graph.from_edges(n, edges)
            assert graph6_decode(graph6_encode(g)) == g

    def test_large_roundtrip(self):
        g = make_graph(100, [(i, i + 1) for i in range(99)])
        assert graph6_decode(graph6_encode(g)) == g

    def test_malformed(self):
        with pytest.raises(Graph6Error):
            graph6_decode("")
        with pytest.raises(Graph6Error):
            graph6_decode("B")        # truncated body
        with pytest.raises(Graph6Error):
            graph6_decode("A" + chr(130))  # invalid byte
        with pytest.raises(Graph6Error):
            graph6_decode("Aw")       # nonzero padding
        with pytest.raises(Graph6Error):
            graph6_decode("~~~~~~~~")  # oversized order form
