"""Randomized invariant suites over connected graphs.

Each suite runs over at least 200 seeded random graphs; the exact backend
is spot-checked on smaller instances where elimination stays cheap.
"""

from fractions import Fraction
from random import Random

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from rescurv import (
    compute_curvatures,
    laplacian,
    pseudoinverse,
    resistance_matrix,
    resistance_matrix_of,
)

from conftest import deletable_edge, random_connected_graph

ATOL = 1e-9


class TestPseudoinverseIdentities:
    def test_float_identities_200_graphs(self):
        rng = Random(1001)
        for _ in range(200):
            g = random_connected_graph(rng, n_max=50)
            L = laplacian(g, "float").entries
            P = pseudoinverse(laplacian(g, "float")).entries
            assert np.max(np.abs(L @ P @ L - L)) <= ATOL
            assert np.max(np.abs(P @ L @ P - P)) <= ATOL
            LP = L @ P
            assert np.max(np.abs(LP - LP.T)) <= ATOL
            assert np.max(np.abs(P @ np.ones(g.n))) <= ATOL

    def test_exact_identities_small_graphs(self):
        rng = Random(1002)
        for _ in range(30):
            g = random_connected_graph(rng, n_max=8, weighted=True)
            n = g.n
            L = laplacian(g).entries
            P = pseudoinverse(laplacian(g)).entries

            def matmul(A, B):
                return [
                    [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
                    for i in range(n)
                ]

            assert matmul(matmul(L, P), L) == L
            assert all(sum(row) == 0 for row in P)


class TestResistanceMetric:
    def test_metric_axioms_200_graphs(self):
        rng = Random(2001)
        for _ in range(200):
            g = random_connected_graph(rng, n_max=25)
            W = resistance_matrix_of(g, "float").entries
            assert np.max(np.abs(np.diag(W))) <= ATOL
            assert np.max(np.abs(W - W.T)) <= ATOL
            off = W + np.eye(g.n)  # keep the zero diagonal out of the positivity check
            assert off.min() > 0
            # triangle inequality over all ordered triples (x, y, z)
            assert (W[:, None, :] <= W[:, :, None] + W[None, :, :] + ATOL).all()

    @given(st.integers(0, 10**9))
    @settings(max_examples=60, deadline=None)
    def test_triangle_inequality_exact(self, seed):
        g = random_connected_graph(Random(seed), n_max=7, weighted=True)
        W = resistance_matrix_of(g).entries
        n = g.n
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    assert W[x][z] <= W[x][y] + W[y][z]


class TestRayleighMonotonicity:
    def test_deleting_an_edge_never_lowers_resistance(self):
        rng = Random(3001)
        done = 0
        while done < 200:
            g = random_connected_graph(rng, n_max=16)
            edge = deletable_edge(rng, g)
            if edge is None:
                continue
            W = resistance_matrix_of(g, "float").entries
            W2 = resistance_matrix_of(g.delete_edge(*edge), "float").entries
            assert (W2 >= W - 1e-9).all()
            done += 1

    def test_exact_strict_on_affected_pair(self):
        rng = Random(3002)
        done = 0
        while done < 25:
            g = random_connected_graph(rng, n_max=7)
            edge = deletable_edge(rng, g)
            if edge is None:
                continue
            W = resistance_matrix_of(g).entries
            W2 = resistance_matrix_of(g.delete_edge(*edge)).entries
            assert all(
                W2[i][j] >= W[i][j] for i in range(g.n) for j in range(g.n)
            )
            u, v = edge
            assert W2[u][v] > W[u][v]
            done += 1


class TestCurvatureMonotonicity:
    def test_equal_degree_vertices_of_subgraphs(self):
        rng = Random(4001)
        comparisons = 0
        trials = 0
        while trials < 200:
            h = random_connected_graph(rng, n_max=9)
            edge = deletable_edge(rng, h)
            if edge is None:
                continue
            trials += 1
            g = h.delete_edge(*edge)
            second = deletable_edge(rng, g)
            if second is not None and rng.random() < 0.5:
                g = g.delete_edge(*second)
            ph = compute_curvatures(h)
            pg = compute_curvatures(g)
            for i in range(h.n):
                if g.degree(i) == h.degree(i):
                    assert pg.values[i] <= ph.values[i]
                    comparisons += 1
        assert comparisons > 200


class TestCurvatureSum:
    def test_unit_sum_200_graphs(self):
        rng = Random(5001)
        for _ in range(200):
            g = random_connected_graph(rng, n_max=40)
            total = compute_curvatures(g, "float").total()
            assert abs(total - 1) <= ATOL

    @given(st.integers(0, 10**9))
    @settings(max_examples=50, deadline=None)
    def test_unit_sum_exact(self, seed):
        g = random_connected_graph(Random(seed), n_max=9)
        assert compute_curvatures(g).total() == 1

    def test_vertex_transitive_spot_checks(self):
        from rescurv import cycle, hypercube

        for n in (3, 5, 8, 12):
            assert compute_curvatures(cycle(n)).values == [Fraction(1, n)] * n
        for d in (2, 3, 4):
            n = 2**d
            assert compute_curvatures(hypercube(d)).values == [Fraction(1, n)] * n
