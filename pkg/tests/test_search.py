"""Extremal searches, structure reports, conjecture comparisons."""

import pytest

from ospectra.eigen import spectrum
from ospectra.enumeration import canonical_graph6
from ospectra.families import (bridged_double_fan, diamond_double_fan, fan,
                               fan_star, figure3_graph, triple_fan_chain)
from ospectra.search import (conjecture_suite, extremal_lambda_k,
                             legal_attachments, named_candidates,
                             structured_candidates_two_hub,
                             structured_search_two_hub, verify_structure)


class TestExhaustive:
    def test_small_even_maximizer(self):
        res = extremal_lambda_k(8, 2, "exhaustive")
        assert res.ties == 1
        assert res.argmax == [canonical_graph6(bridged_double_fan(4))]
        assert res.gap > 0

    def test_dominates_named_candidates(self):
        for n, k in ((8, 2), (9, 2), (9, 3)):
            res = extremal_lambda_k(n, k, "exhaustive")
            for _tag, g in named_candidates(n, k):
                if g.n == n:
                    assert res.best_value >= spectrum(g).value(k) - 1e-10

    def test_argmax_graphs_valid(self):
        from ospectra.graphs import connected, graph6_decode
        from ospectra.outerplanar import is_outerplanar

        res = extremal_lambda_k(7, 2, "exhaustive")
        for key in res.argmax:
            g = graph6_decode(key)
            assert g.n == 7 and connected(g)
            assert is_outerplanar(g).outerplanar


class TestStructured:
    @pytest.mark.parametrize("q", [7, 10, 15])
    def test_even_family_best_is_bridged(self, q):
        res = extremal_lambda_k(2 * q, 2, "structured")
        assert res.argmax == [canonical_graph6(bridged_double_fan(q))]

    def test_odd_family_attains_fan_value(self):
        q = 8
        res = extremal_lambda_k(2 * q + 1, 2, "structured")
        assert abs(res.best_value - spectrum(fan(q)).value(1)) <= 1e-9

    @pytest.mark.parametrize("n", [14, 21, 30])
    def test_two_connected_best_is_diamond(self, n):
        res = extremal_lambda_k(n, 2, "structured-2connected")
        assert res.argmax == [canonical_graph6(diamond_double_fan(n))]
        assert res.gap is not None and res.gap > 0

    def test_candidates_cover_named_shapes(self):
        keys = set()
        for g in structured_candidates_two_hub(14):
            if g.n == 14:
                keys.add(canonical_graph6(g))
        assert canonical_graph6(bridged_double_fan(7)) in keys
        assert canonical_graph6(diamond_double_fan(14)) in keys

    def test_three_hub_window(self):
        res = extremal_lambda_k(13, 3, "structured")
        assert abs(res.best_value - spectrum(fan(4)).value(1)) <= 1e-9

    def test_named_entry_point(self):
        direct = structured_search_two_hub(16, 2)
        via_family = extremal_lambda_k(16, 2, "two-hub-structured")
        assert direct.argmax == via_family.argmax
        two = structured_search_two_hub(16, 2, two_connected=True)
        assert two.argmax == [canonical_graph6(diamond_double_fan(16))]


class TestCutVertexFamily:
    def test_all_members_tie(self):
        q = 6
        res = extremal_lambda_k(2 * q + 1, 2, "cut-vertex")
        assert res.ties == res.candidates  # interlacing pins every member to the same value
        assert abs(res.best_value - spectrum(fan(q)).value(1)) <= 1e-9

    def test_legal_attachments_all_outerplanar(self):
        from ospectra.families import cut_vertex_family
        from ospectra.outerplanar import is_outerplanar

        atts = legal_attachments(5)
        assert len(atts) >= 5
        for att in atts:
            assert is_outerplanar(cut_vertex_family(5, att)).outerplanar

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            extremal_lambda_k(12, 2, "cut-vertex")


class TestStructureReport:
    def test_bridged(self):
        rep = verify_structure(bridged_double_fan(20), 2)
        assert rep.hubs == [0, 20]
        assert rep.hubs_adjacent is False
        assert rep.shared_neighbors == 0
        assert rep.top_degrees[:2] == [19, 19]
        assert {rep.max_vertex, rep.min_vertex} == {0, 20}
        assert rep.positive_class == rep.negative_class == 20
        # the bridge endpoints separate the two halves
        assert rep.cut_vertices == [19, 21]

    def test_figure3(self):
        rep = verify_structure(figure3_graph(), 2)
        # hubs and middle path vertices all reach degree 4, the graph's max
        assert rep.top_degrees[:2] == [4, 4]
        assert rep.block_count >= 2

    def test_fan_star_hubs(self):
        g = fan_star(3, 13)
        rep = verify_structure(g, 1)
        assert rep.top_degrees[:3] == [3, 3, 3]
        assert rep.cut_vertices  # the center separates the fans

    def test_fan_star_k3_degenerate(self):
        # the three-fan star has an eigenvalue of multiplicity two at the
        # target index, so the eigenvector-based report must refuse
        from ospectra.eigen import MultiplicityError

        with pytest.raises(MultiplicityError):
            verify_structure(fan_star(3, 13), 3)


class TestConjectures:
    def test_even_14(self):
        rows = conjecture_suite("even>=14", 16)
        assert [r.n for r in rows] == [14, 16]
        assert all(r.verdict == "CONSISTENT" for r in rows)

    def test_kq1_small(self):
        rows = conjecture_suite("kq+1", 9)
        two_hub = [r for r in rows if r.kind == "2q+1"]
        assert [r.n for r in two_hub] == [5, 7, 9]
        for r in two_hub:
            assert r.verdict == "CONSISTENT", r
            assert abs(r.conjectured_value - r.best_value) <= 1e-9
        # the lone k = 3 case in range is beaten by the 7-cycle, whose
        # second eigenvalue 2cos(2pi/7) is double; asymptotic claims get no
        # protection at this size and the suite says so
        three_hub = [r for r in rows if r.kind == "3q+1"]
        assert len(three_hub) == 1 and three_hub[0].n == 7
        assert three_hub[0].verdict.startswith("COUNTEREXAMPLE(")
        assert abs(three_hub[0].best_value - 1.2469796037) <= 1e-9

    def test_3q_small_n_counterexample(self):
        # at nine vertices a more symmetric graph beats the chain; the
        # conjecture is asymptotic, and the suite reports the small-n truth
        rows = conjecture_suite("3q", 9)
        assert rows[0].n == 9
        assert rows[0].verdict.startswith("COUNTEREXAMPLE(")
        assert rows[0].best_value > rows[0].conjectured_value

    def test_3q2_deletion_variant(self):
        rows = conjecture_suite("3q+2", 11)
        assert rows and rows[0].n == 11
        assert rows[0].verdict == "CONSISTENT"
        assert abs(rows[0].conjectured_value - 2.0) <= 1e-9

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            conjecture_suite("5q", 20)
