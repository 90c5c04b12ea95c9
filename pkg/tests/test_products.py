from fractions import Fraction
from random import Random

import numpy as np
import pytest

from rescurv import (
    ProductDescriptor,
    cartesian_product,
    classify_boundary_interior,
    compute_curvatures,
    cycle,
    eigensystem,
    hypercube,
    laplacian,
    path,
    product_eigensystem,
    product_graph,
    product_laplacian,
    product_node_curvatures,
)
from rescurv.errors import DisconnectedGraphError, NotAPathProductError
from rescurv.graph import build_graph

from conftest import random_connected_graph


class TestCartesianProduct:
    def test_p2_p2_is_c4(self):
        g = cartesian_product(path(2), path(2))
        assert g.n == 4
        assert g.edge_count() == 4
        assert all(g.degree(v) == 2 for v in range(4))
        assert g.is_connected()

    def test_p2_p3_counts(self):
        g = cartesian_product(path(2), path(3))
        assert (g.n, g.edge_count()) == (6, 7)

    def test_p3_p3_counts(self):
        g = cartesian_product(path(3), path(3))
        assert (g.n, g.edge_count()) == (9, 12)

    def test_edge_count_formula(self):
        rng = Random(3)
        for _ in range(10):
            g1 = random_connected_graph(rng, n_max=6)
            g2 = random_connected_graph(rng, n_max=6)
            g = cartesian_product(g1, g2)
            assert g.n == g1.n * g2.n
            assert g.edge_count() == g1.n * g2.edge_count() + g2.n * g1.edge_count()

    def test_resistances_inherited(self):
        g1 = build_graph(2, [(0, 1, "1/3")])
        g2 = build_graph(2, [(0, 1, "5/2")])
        g = cartesian_product(g1, g2)
        assert g.resistance(0, 2) == Fraction(1, 3)  # factor-1 edge, copy at 0
        assert g.resistance(0, 1) == Fraction(5, 2)  # factor-2 edge at vertex 0


class TestDescriptor:
    def test_total_n_and_sizes(self):
        pd = ProductDescriptor((path(3), path(4), path(2)))
        assert pd.total_n == 24
        assert pd.sizes == (3, 4, 2)

    def test_row_major_index_round_trip(self):
        pd = ProductDescriptor((path(3), path(4), path(2)))
        for idx in range(pd.total_n):
            assert pd.index(pd.coordinates(idx)) == idx
        assert pd.index((1, 2, 1)) == 1 * 8 + 2 * 2 + 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ProductDescriptor(())


class TestProductLaplacian:
    def test_matches_graph_route_exact(self):
        rng = Random(11)
        for _ in range(8):
            factors = tuple(
                random_connected_graph(rng, n_max=4, weighted=True)
                for _ in range(rng.randint(2, 3))
            )
            pd = ProductDescriptor(factors)
            via_kron = product_laplacian(pd, "exact")
            via_graph = laplacian(product_graph(pd), "exact")
            assert via_kron.entries == via_graph.entries

    def test_k2_cubed_is_q3(self):
        pd = ProductDescriptor((path(2),) * 3)
        assert product_laplacian(pd).entries == laplacian(hypercube(3)).entries

    def test_row_sums_zero(self):
        lap = product_laplacian(ProductDescriptor((path(3), path(4))))
        assert all(sum(row) == 0 for row in lap.entries)

    def test_float_backend(self):
        pd = ProductDescriptor((path(3), cycle(4)))
        fl = product_laplacian(pd, "float")
        assert np.allclose(fl.entries, product_laplacian(pd, "exact").as_array())


class TestProductEigensystem:
    def test_k2_k2_matches_c4(self):
        es = product_eigensystem(
            eigensystem(laplacian(path(2))), eigensystem(laplacian(path(2)))
        )
        assert np.allclose(es.values, [0, 2, 2, 4], atol=1e-9)

    def test_p3_p3_sum_multiset(self):
        es1 = eigensystem(laplacian(path(3)))
        es = product_eigensystem(es1, es1)
        expected = np.sort((es1.values[:, None] + es1.values[None, :]).ravel())
        assert np.allclose(es.values, expected, atol=1e-9)
        direct = eigensystem(laplacian(cartesian_product(path(3), path(3)), "float"))
        assert np.allclose(es.values, direct.values, atol=1e-8)

    def test_identity_factor_keeps_spectrum(self):
        g = cycle(5)
        es = product_eigensystem(eigensystem(laplacian(g)), eigensystem(laplacian(path(1))))
        assert np.allclose(es.values, eigensystem(laplacian(g)).values, atol=1e-12)

    def test_vectors_diagonalize_product_laplacian(self):
        pd = ProductDescriptor((path(3), cycle(4)))
        es = product_eigensystem(
            eigensystem(laplacian(path(3))), eigensystem(laplacian(cycle(4)))
        )
        L = product_laplacian(pd, "float").entries
        assert np.allclose(L @ es.vectors, es.vectors * es.values, atol=1e-8)

    def test_random_factor_spectra(self):
        rng = Random(47)
        for _ in range(6):
            g1 = random_connected_graph(rng, n_max=6)
            g2 = random_connected_graph(rng, n_max=6)
            es = product_eigensystem(
                eigensystem(laplacian(g1)), eigensystem(laplacian(g2))
            )
            direct = eigensystem(laplacian(cartesian_product(g1, g2), "float"))
            assert np.allclose(es.values, direct.values, atol=1e-8)


class TestProductCurvatures:
    def test_p2_squared_constant_quarter(self):
        p = product_node_curvatures(ProductDescriptor((path(2), path(2))))
        assert p.values == [Fraction(1, 4)] * 4

    def test_q3_constant_eighth(self):
        p = product_node_curvatures(ProductDescriptor((path(2),) * 3))
        assert p.values == [Fraction(1, 8)] * 8

    def test_p3_cubed_has_negative_entries(self):
        p = product_node_curvatures(ProductDescriptor((path(3),) * 3))
        assert sum(1 for x in p.values if x < 0) >= 2

    def test_vertex_transitive_product_is_constant(self):
        p = product_node_curvatures(ProductDescriptor((cycle(4), cycle(5))))
        assert p.values == [Fraction(1, 20)] * 20

    def test_matches_direct_pipeline(self):
        pd = ProductDescriptor((path(3), cycle(4)))
        assert (
            product_node_curvatures(pd).values
            == compute_curvatures(product_graph(pd)).values
        )

    def test_disconnected_factor_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            product_node_curvatures(
                ProductDescriptor((build_graph(2, []), path(2)))
            )


class TestBoundaryInterior:
    def test_3x3_single_interior(self):
        labels = classify_boundary_interior(ProductDescriptor((path(3), path(3))))
        assert labels.count("interior") == 1
        assert labels[4] == "interior"

    def test_3x4_two_interior(self):
        labels = classify_boundary_interior(ProductDescriptor((path(3), path(4))))
        assert labels.count("interior") == 2

    def test_3cube_unique_interior(self):
        labels = classify_boundary_interior(ProductDescriptor((path(3),) * 3))
        assert labels.count("interior") == 1
        assert labels[13] == "interior"

    def test_ladder_has_no_interior(self):
        labels = classify_boundary_interior(ProductDescriptor((path(2), path(6))))
        assert labels.count("interior") == 0

    def test_interior_iff_degree_2d(self):
        pd = ProductDescriptor((path(3), path(4), path(2)))
        g = product_graph(pd)
        labels = classify_boundary_interior(pd)
        for v in range(g.n):
            assert (labels[v] == "interior") == (g.degree(v) == 2 * 3)

    def test_non_path_rejected(self):
        with pytest.raises(NotAPathProductError):
            classify_boundary_interior(ProductDescriptor((cycle(4), path(3))))
