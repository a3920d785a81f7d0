"""Outerplanarity: fast decision, minor oracle, certificates."""

import random

import pytest

from ospectra.enumeration import enumerate_all_graphs
from ospectra.families import bridged_double_fan, fan
from ospectra.graphs import Graph, make_graph
from ospectra.outerplanar import (MinorSearchBudgetError, MinorWitness,
                                  OuterplanarityCertificate, find_minor,
                                  is_outerplanar, validate_certificate)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k23():
    return Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


class TestDecision:
    def test_cycles(self):
        for n in (3, 5, 8, 20):
            cert = is_outerplanar(cycle(n))
            assert cert.outerplanar
            assert validate_certificate(cycle(n), cert)

    def test_k4_and_k23(self):
        for g in (complete(4), k23()):
            cert = is_outerplanar(g, want_witness=True)
            assert not cert.outerplanar
            assert validate_certificate(g, cert)

    def test_singletons_and_forests(self):
        assert is_outerplanar(Graph(1, (0,))).outerplanar
        star = Graph.from_edges(7, [(0, i) for i in range(1, 7)])
        cert = is_outerplanar(star)
        assert cert.outerplanar and validate_certificate(star, cert)

    def test_disconnected(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)])
        cert = is_outerplanar(g)
        assert cert.outerplanar and validate_certificate(g, cert)

    def test_isolated_vertices(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2)])
        cert = is_outerplanar(g)
        assert cert.outerplanar
        assert sorted(cert.order) == [0, 1, 2, 3, 4]
        assert validate_certificate(g, cert)

    def test_large_graph_support(self):
        g = bridged_double_fan(50)
        cert = is_outerplanar(g)
        assert cert.outerplanar and validate_certificate(g, cert)
        # dense large graph is rejected
        h = make_graph(70, [(u, v) for u in range(70) for v in range(u + 1, 70)
                            if (u + v) % 2 == 0 or v == u + 1])
        assert not is_outerplanar(h).outerplanar

    def test_monotone_under_supergraphs(self):
        # adding edges to a non-outerplanar graph never makes it outerplanar
        rng = random.Random(7)
        base = complete(4)
        for _ in range(20):
            n = rng.randint(5, 10)
            edges = set(base.edges())
            for u in range(4, n):
                edges.add((rng.randrange(u), u))
            for _ in range(n):
                u, v = rng.sample(range(n), 2)
                edges.add(tuple(sorted((u, v))))
            assert not is_outerplanar(Graph.from_edges(n, list(edges))).outerplanar


class TestMinorSearch:
    def test_fan_has_neither(self):
        assert find_minor(fan(10), "K4") is None
        assert find_minor(fan(10), "K23") is None

    def test_wheel(self):
        w5 = Graph.from_edges(6, [(0, i) for i in range(1, 6)]
                              + [(i, i % 5 + 1) for i in range(1, 6)])
        assert find_minor(w5, "K4") is not None
        # the hub plus a contracted rim edge realize a K2,3 as well
        assert find_minor(w5, "K23") is not None

    def test_fan_plus_endpoint_chord(self):
        g = Graph.from_edges(6, fan(6).edges() + [(1, 5)])
        w = find_minor(g, "K23")
        assert w is not None
        assert validate_certificate(g, OuterplanarityCertificate(False, None, w))

    def test_subdivision_found_through_paths(self):
        # K4 with every edge subdivided once: minor present, degree-3 hubs only
        edges = []
        nxt = 4
        for u in range(4):
            for v in range(u + 1, 4):
                edges += [(u, nxt), (nxt, v)]
                nxt += 1
        g = Graph.from_edges(nxt, edges)
        assert find_minor(g, "K4") is not None
        assert is_outerplanar(g, want_witness=True).witness is not None

    def test_pattern_validation(self):
        with pytest.raises(ValueError):
            find_minor(fan(5), "K5")
        with pytest.raises(ValueError):
            find_minor(make_graph(30, [(i, i + 1) for i in range(29)]), "K4")

    def test_budget(self):
        g = complete(12)
        with pytest.raises(MinorSearchBudgetError):
            find_minor(g, "K23", budget=10)


class TestCertificates:
    def test_invalid_order_rejected(self):
        g = fan(5)
        good = is_outerplanar(g)
        assert validate_certificate(g, good)
        shuffled = OuterplanarityCertificate(True, (2, 0, 1, 4, 3), None)
        assert not validate_certificate(g, shuffled)
        short = OuterplanarityCertificate(True, (0, 1, 2), None)
        assert not validate_certificate(g, short)

    def test_witnessless_no_certificate_rejected(self):
        g = complete(4)
        assert not validate_certificate(g, is_outerplanar(g))

    def test_forged_witness_rejected(self):
        g = complete(4)
        w = MinorWitness("K4", (1, 2, 4, 8))
        assert validate_certificate(g, OuterplanarityCertificate(False, None, w))
        overlapping = MinorWitness("K4", (3, 2, 4, 8))
        assert not validate_certificate(g, OuterplanarityCertificate(False, None, overlapping))
        disconnected = MinorWitness("K23", (1, 2, 4, 8, 16 | 32))
        g2 = Graph.from_edges(6, k23().edges())
        assert not validate_certificate(g2, OuterplanarityCertificate(False, None, disconnected))


class TestAgreement:
    def test_exhaustive_small(self):
        # every graph on <= 7 vertices: fast route equals the minor oracle;
        # the 8-vertex sweep runs in the acceptance suite
        for n in range(1, 8):
            for g in enumerate_all_graphs(n):
                fast = is_outerplanar(g)
                slow = (find_minor(g, "K4") is None
                        and find_minor(g, "K23") is None)
                assert fast.outerplanar == slow, g.edges()
                if fast.outerplanar:
                    assert validate_certificate(g, fast)

    def test_random_agreement(self):
        rng = random.Random(11)
        for _ in range(400):
            n = rng.randint(4, 16)
            p = rng.uniform(0.08, 0.5)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p]
            g = Graph.from_edges(n, edges)
            fast = is_outerplanar(g, want_witness=True)
            slow = (find_minor(g, "K4") is None and find_minor(g, "K23") is None)
            assert fast.outerplanar == slow
            assert validate_certificate(g, fast)

    def test_triangulated_polygon_mutations(self):
        # maximal outerplanar graphs (triangulated polygons) sit exactly on
        # the edge-count boundary; chord swaps probe the embedding logic
        # rather than the counting prefilter
        rng = random.Random(13)
        for _ in range(150):
            n = rng.randint(5, 14)
            edges = {(i, (i + 1) % n) for i in range(n)}
            # random ear triangulation: repeatedly split a polygon arc
            arcs = [tuple(range(n))]
            while arcs:
                arc = arcs.pop()
                if len(arc) <= 2:
                    continue
                i = rng.randrange(1, len(arc) - 1)
                if len(arc) > 3:
                    edges.add((min(arc[0], arc[-1]), max(arc[0], arc[-1])))
                arcs.append(arc[:i + 1])
                arcs.append(arc[i:])
            edges = {tuple(sorted(e)) for e in edges}
            g = Graph.from_edges(n, list(edges))
            assert g.m <= 2 * n - 3
            cert = is_outerplanar(g)
            assert cert.outerplanar and validate_certificate(g, cert)
            # swap a random chord for a random non-edge: the minor oracle
            # arbitrates whatever the face embedding decides
            chords = [e for e in edges if (e[1] - e[0]) % n not in (1, n - 1)]
            non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                         if (u, v) not in edges]
            if not chords or not non_edges:
                continue
            mutated = set(edges)
            mutated.remove(rng.choice(chords))
            mutated.add(rng.choice(non_edges))
            h = Graph.from_edges(n, list(mutated))
            fast = is_outerplanar(h).outerplanar
            slow = (find_minor(h, "K4") is None and find_minor(h, "K23") is None)
            assert fast == slow, sorted(mutated)

    @pytest.mark.slow
    def test_random_agreement_ten_thousand(self):
        # the full-volume invariant: both decision routes agree on 10^4
        # graphs up to 16 vertices, mixing dense rejects with cycle-plus-
        # chords instances that sit near the boundary
        rng = random.Random(0)
        for trial in range(10_000):
            n = rng.randint(4, 16)
            edges = set()
            if trial % 2 == 0:
                p = rng.uniform(0.08, 0.5)
                edges = {(u, v) for u in range(n) for v in range(u + 1, n)
                         if rng.random() < p}
            else:
                edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
                for _ in range(rng.randint(0, n)):
                    a, b = rng.sample(range(n), 2)
                    edges.add(tuple(sorted((a, b))))
            g = Graph.from_edges(n, list(edges))
            fast = is_outerplanar(g).outerplanar
            slow = (find_minor(g, "K4") is None and find_minor(g, "K23") is None)
            assert fast == slow, sorted(edges)
