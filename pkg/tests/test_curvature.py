import json
from fractions import Fraction
from random import Random

import pytest

from rescurv import (
    build_graph,
    compute_curvatures,
    cycle,
    graph_curvature,
    grid,
    node_curvatures,
    path,
    resistance_matrix_of,
    sign_classify,
)
from rescurv.errors import DimensionMismatchError

from conftest import random_connected_graph

HALF = Fraction(1, 2)


class TestNodeCurvatures:
    def test_p4(self):
        p = compute_curvatures(path(4))
        assert p.values == [HALF, 0, 0, HALF]

    def test_c5_vertex_transitive(self):
        p = compute_curvatures(cycle(5))
        assert p.values == [Fraction(1, 5)] * 5

    def test_k2(self):
        p = compute_curvatures(path(2))
        assert p.values == [HALF, HALF]

    def test_sum_rule_exact(self):
        rng = Random(13)
        for _ in range(20):
            g = random_connected_graph(rng)
            assert compute_curvatures(g).total() == 1

    def test_sum_rule_float(self):
        g = random_connected_graph(Random(17), n_max=30)
        assert compute_curvatures(g, "float").total() == pytest.approx(1, abs=1e-9)

    def test_explicit_resistance_matrix_input(self):
        g = path(4)
        p = node_curvatures(g, resistance_matrix_of(g))
        assert p.values == [HALF, 0, 0, HALF]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            node_curvatures(path(3), resistance_matrix_of(path(4)))


class TestGraphCurvature:
    def test_p4_zero(self):
        assert graph_curvature(compute_curvatures(path(4))) == 0

    def test_c5(self):
        assert graph_curvature(compute_curvatures(cycle(5))) == Fraction(1, 5)

    def test_3x3_grid_center(self):
        # the unique interior vertex of the 3x3 grid carries the minimum
        p = compute_curvatures(grid(3, 3))
        assert graph_curvature(p) == Fraction(-1, 6)
        assert p.values[4] == Fraction(-1, 6)


class TestSignClassify:
    def test_p4_exact(self):
        assert sign_classify(compute_curvatures(path(4))) == [1, 0, 0, 1]

    def test_c5_exact(self):
        assert sign_classify(compute_curvatures(cycle(5))) == [1] * 5

    def test_p2(self):
        assert sign_classify(compute_curvatures(path(2))) == [1, 1]

    def test_float_tolerance(self):
        p = compute_curvatures(path(4), "float")
        assert sign_classify(p, 1e-9) == [1, 0, 0, 1]

    def test_exact_rejects_nonzero_epsilon(self):
        with pytest.raises(ValueError):
            sign_classify(compute_curvatures(path(2)), 1e-9)

    def test_negative_epsilon_rejected(self):
        with pytest.raises(ValueError):
            sign_classify(compute_curvatures(path(2), "float"), -1)


class TestExports:
    def test_json_exact_strings(self):
        obj = compute_curvatures(path(4)).to_json_obj()
        assert obj == {"0": "1/2", "1": "0", "2": "0", "3": "1/2"}
        json.dumps(obj)

    def test_csv(self):
        text = compute_curvatures(path(2)).to_csv()
        assert text.splitlines() == ["vertex,curvature", "0,1/2", "1,1/2"]

    def test_weighted_graph_uses_plain_resistance_sum(self):
        # one edge of resistance 1/2: omega = 1/2, both ends get 3/4
        g = build_graph(2, [(0, 1, "1/2")])
        p = compute_curvatures(g)
        assert p.values == [Fraction(3, 4), Fraction(3, 4)]
        assert p.total() != 1  # the unit-sum rule is specific to unit resistances
