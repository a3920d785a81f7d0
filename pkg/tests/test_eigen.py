"""Dense eigensolver: accuracy, identities, eigenpairs, interlacing."""

import math
import random

import numpy as np
import pytest

from ospectra._kernels import backend, pure
from ospectra.eigen import (DegenerateRatioError, MultiplicityError,
                            adjacency_matrix, check_interlacing, eigenpair,
                            hub_ratio, moment_identity_residual, spectrum)
from ospectra.families import (bridged_double_fan, diamond_double_fan, fan,
                               fan_star)
from ospectra.graphs import Graph


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestSpectrum:
    def test_path_closed_form(self):
        for n in (3, 6, 11):
            vals = spectrum(path(n)).values
            expect = sorted((2 * math.cos(k * math.pi / (n + 1))
                             for k in range(1, n + 1)), reverse=True)
            assert np.allclose(vals, expect, atol=1e-12)

    def test_complete_graph(self):
        vals = spectrum(complete(3)).values
        assert np.allclose(vals, [2, -1, -1], atol=1e-12)

    def test_fan_matches_series(self):
        lam1 = spectrum(fan(100)).value(1)
        s = 99.0
        series = (math.sqrt(s) + 1 + 0.5 / math.sqrt(s) - 1 / s
                  - 1 / (8 * s**1.5) - 7 / (16 * s**2.5))
        assert abs(lam1 - series) <= 3 / s**3

    def test_lapack_oracle(self):
        rng = np.random.default_rng(0)
        for _ in range(25):
            n = int(rng.integers(2, 120))
            a = rng.standard_normal((n, n))
            a = a + a.T
            mine = spectrum(a).values
            ref = np.sort(np.linalg.eigvalsh(a))[::-1]
            assert np.abs(mine - ref).max() <= 1e-11 * max(1.0, np.abs(ref).max())

    def test_trace_identities(self):
        rng = random.Random(9)
        for _ in range(30):
            n = rng.randint(2, 40)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.3]
            g = Graph.from_edges(n, edges)
            s = spectrum(g)
            assert abs(float(s.values.sum())) <= 1e-8 * n
            assert abs(float((s.values**2).sum()) - 2 * g.m) <= 1e-8 * max(1, 2 * g.m)

    def test_spectral_radius_bounds(self):
        rng = random.Random(10)
        for _ in range(30):
            n = rng.randint(2, 50)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.25]
            g = Graph.from_edges(n, edges)
            lam1 = spectrum(g).value(1)
            delta = max(g.degrees())
            assert lam1 <= delta + 1e-9
            assert lam1 >= max(math.sqrt(delta), 2 * g.m / n) - 1e-9

    def test_input_validation(self):
        with pytest.raises(ValueError):
            spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError):
            spectrum(np.zeros((3, 4)))
        with pytest.raises(ValueError):
            spectrum(np.zeros((4097, 4097)))


class TestEigenpair:
    def test_bridged_antisymmetry(self):
        pair = eigenpair(bridged_double_fan(50), 2)
        assert abs(pair.vector[0] + pair.vector[50]) <= 1e-8
        assert pair.residual <= 1e-9

    def test_bridged_lambda3_small(self):
        assert spectrum(bridged_double_fan(50)).value(3) < 2

    def test_fan_perron_vector(self):
        pair = eigenpair(fan(20), 1)
        assert (pair.vector > 0).all()

    def test_orthogonality(self):
        for g in (bridged_double_fan(20), diamond_double_fan(24)):
            z = eigenpair(g, 1).vector
            x = eigenpair(g, 2).vector
            assert abs(float(z @ x)) <= 1e-8

    def test_multiplicity_error(self):
        # disjoint union of two triangles: lambda_1 = lambda_2 = 2
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        with pytest.raises(MultiplicityError):
            eigenpair(g, 1)

    def test_sign_convention(self):
        pair = eigenpair(fan(15), 2)
        assert pair.vector[int(np.argmax(np.abs(pair.vector)))] > 0

    def test_k_range(self):
        with pytest.raises(ValueError):
            eigenpair(fan(5), 0)
        with pytest.raises(ValueError):
            eigenpair(fan(5), 6)

    def test_near_threshold_gap(self):
        # a pair separated by twice the simplicity threshold must still give
        # a clean vector; half the threshold must refuse
        rng = np.random.default_rng(11)
        q, _ = np.linalg.qr(rng.standard_normal((8, 8)))

        def make(gap):
            vals = np.array([3.0, 1.0 + gap, 1.0, -0.5, -1.0, -1.5, -2.0, -2.5])
            a = (q * vals) @ q.T
            return (a + a.T) / 2

        pair = eigenpair(make(2e-8), 2)
        assert pair.residual <= 1e-9
        with pytest.raises(MultiplicityError):
            eigenpair(make(5e-9), 2)


class TestInterlacing:
    def test_theorem_holds(self):
        rng = random.Random(12)
        for _ in range(60):
            n = rng.randint(3, 64)
            p = rng.uniform(0.1, 0.5)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p]
            g = Graph.from_edges(n, edges)
            deleted = rng.sample(range(n), rng.randint(1, min(3, n - 1)))
            ok, viol = check_interlacing(g, deleted)
            assert ok, viol

    def test_hub_deletion_bound(self):
        g = bridged_double_fan(12)
        big = spectrum(g)
        small = spectrum(g.induced([v for v in range(24) if v != 0]))
        assert small.value(1) >= big.value(2) - 1e-9

    def test_fan_star_exact_equality(self):
        g = fan_star(2, 21)
        h = spectrum(fan(10)).value(1)
        assert abs(spectrum(g).value(2) - h) <= 1e-9

    def test_matrix_input(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((12, 12))
        a = a + a.T
        ok, viol = check_interlacing(a, [3, 7])
        assert ok, viol

    def test_validation(self):
        with pytest.raises(ValueError):
            check_interlacing(fan(5), [])
        with pytest.raises(ValueError):
            check_interlacing(fan(5), [0, 1, 2, 3, 4])


class TestWalkIdentity:
    def test_first_order(self):
        r = moment_identity_residual(fan(12), 2, 1, 0)
        assert r <= 1e-9

    def test_zeroth_order(self):
        assert moment_identity_residual(fan(12), 1, 0, 3) == 0.0

    @pytest.mark.parametrize("i", [2, 3, 6])
    def test_deeper_orders(self, i):
        assert moment_identity_residual(fan(30), 1, i, 0) <= 1e-7

    def test_order_cap(self):
        with pytest.raises(ValueError):
            moment_identity_residual(fan(10), 1, 7, 0)


class TestHubRatio:
    def test_bridged_is_minus_one(self):
        hr = hub_ratio(bridged_double_fan(30), 0, 30)
        assert abs(hr.ratio + 1) <= 1e-8

    def test_even_diamond_symmetric(self):
        hr = hub_ratio(diamond_double_fan(40), 0, 20)
        assert abs(hr.ratio + 1) <= 1e-8

    def test_odd_diamond_trend(self):
        # unequal hubs: ratio approaches -lambda/2 as q grows
        devs = []
        for q in (20, 40, 80):
            g = diamond_double_fan(2 * q + 1)
            hr = hub_ratio(g, q, 0)
            assert hr.cross_edges == 2
            devs.append(hr.rel_deviation)
        assert devs[0] > devs[1] > devs[2]

    def test_degenerate(self):
        # lambda_2 eigenvector of a path vanishes at the middle vertex
        with pytest.raises(DegenerateRatioError):
            hub_ratio(path(5), 2, 0)


class TestBackends:
    def test_pure_matches_selected(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            n = int(rng.integers(2, 80))
            a = rng.standard_normal((n, n))
            a = a + a.T
            w1 = a.copy()
            d, e, _ = pure.tridiagonalize(w1)
            pv = np.sort(pure.tridiag_eigenvalues(d, e))
            ref = np.sort(np.linalg.eigvalsh(a))
            assert np.abs(pv - ref).max() <= 1e-11 * max(1.0, np.abs(ref).max())

    def test_compiled_available_matches_pure(self):
        if backend() != "compiled":
            pytest.skip("compiled kernels not built")
        from ospectra._kernels import _ceigen

        rng = np.random.default_rng(4)
        for _ in range(10):
            n = int(rng.integers(2, 100))
            a = rng.standard_normal((n, n))
            a = a + a.T
            d1, e1, _ = pure.tridiagonalize(a.copy())
            d2, e2, _ = _ceigen.tridiagonalize(a.copy())
            v1 = np.sort(pure.tridiag_eigenvalues(d1, e1))
            v2 = np.sort(_ceigen.tridiag_eigenvalues(d2, e2))
            assert np.abs(v1 - v2).max() <= 1e-12 * max(1.0, np.abs(v1).max())
