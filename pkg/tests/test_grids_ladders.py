import math
from fractions import Fraction
import pytest

from rescurv import (
    WIDE_GRID_BOUNDARY_FLOOR,
    central_edge_resistance_sweep,
    compute_curvatures,
    corner_curvature,
    effective_resistance,
    grid,
    grid_boundary_curvatures,
    ladder,
    ladder_alpha,
    ladder_curvatures,
    path,
    rail_resistance,
    rung_resistance,
    verify_grid_theorem,
)
from rescurv.errors import BackendNotExactError, IndexOutOfRangeError
from rescurv.grids_ladders import central_edge

SQRT3_MINUS_1 = math.sqrt(3) - 1


class TestGenerators:
    def test_path_shapes(self):
        assert path(1).n == 1 and path(1).edge_count() == 0
        assert path(2).edge_count() == 1
        assert path(5).edge_count() == 4

    def test_grid_shapes(self):
        assert grid(3, 3).n == 9 and grid(3, 3).edge_count() == 12
        g = grid(1, 4)
        assert g.edge_count() == 3 and max(g.degree(v) for v in range(4)) == 2

    def test_ladder_is_2xn(self):
        g = ladder(4)
        assert (g.n, g.edge_count()) == (8, 10)


class TestLadderAlpha:
    def test_first_values(self):
        t = ladder_alpha(5)
        assert t.alphas == (
            Fraction(1),
            Fraction(3, 4),
            Fraction(11, 15),
            Fraction(41, 56),
            Fraction(153, 209),
        )

    def test_strictly_decreasing_above_limit(self):
        t = ladder_alpha(50)
        for k in range(1, 50):
            assert t.alpha(k) > t.alpha(k + 1)
        for k in range(1, 51):
            a = t.alpha(k)
            # a > sqrt(3) - 1 expressed without irrationals
            assert a * a + 2 * a - 2 > 0

    def test_alpha50_near_limit(self):
        a50 = float(ladder_alpha(50).alpha(50))
        assert abs(a50 - SQRT3_MINUS_1) < 1e-12

    def test_bad_index(self):
        with pytest.raises(IndexOutOfRangeError):
            ladder_alpha(3).alpha(4)
        with pytest.raises(IndexOutOfRangeError):
            ladder_alpha(0)


class TestRungsAndRails:
    def test_rung_examples(self):
        assert rung_resistance(3, 2) == Fraction(3, 5)
        assert rung_resistance(2, 1) == Fraction(3, 4)
        assert rung_resistance(1, 1) == 1

    def test_rail_examples(self):
        assert rail_resistance(3, 1) == Fraction(11, 15)
        assert rail_resistance(4, 2) == Fraction(5, 7)
        for n in (2, 3, 5, 8):
            assert rail_resistance(n, 1) == ladder_alpha(n).alpha(n)
            assert rail_resistance(n, n - 1) == ladder_alpha(n).alpha(n)

    def test_match_spectral_resistances(self):
        for n in range(1, 9):
            g = ladder(n)
            for k in range(1, n + 1):
                spectral = effective_resistance(g, k - 1, n + k - 1)
                assert rung_resistance(n, k) == spectral
            for k in range(1, n):
                spectral = effective_resistance(g, k - 1, k)
                assert rail_resistance(n, k) == spectral

    def test_bad_indices(self):
        with pytest.raises(IndexOutOfRangeError):
            rung_resistance(3, 4)
        with pytest.raises(IndexOutOfRangeError):
            rail_resistance(3, 3)


class TestLadderCurvatures:
    def test_single_edge(self):
        assert ladder_curvatures(1).values == [Fraction(1, 2)] * 2

    def test_n2_is_c4(self):
        assert ladder_curvatures(2).values == [Fraction(1, 4)] * 4

    def test_matches_spectral(self):
        for n in range(1, 9):
            assert ladder_curvatures(n).values == compute_curvatures(ladder(n)).values

    def test_interior_negative(self):
        p = ladder_curvatures(6)
        for k in range(2, 6):
            assert p.values[k - 1] < 0

    def test_corner_sequence_increasing_to_limit(self):
        values = [corner_curvature(n) for n in range(2, 40)]
        for a, b in zip(values, values[1:]):
            assert a < b
        limit = 2 - math.sqrt(3)
        assert all(float(v) < limit for v in values)
        assert abs(float(values[-1]) - limit) < 1e-9


class TestGridBoundary:
    def test_3x3_values(self):
        vals = grid_boundary_curvatures(3, 3)
        assert len(vals) == 8
        corners = {0, 2, 6, 8}
        for i, v in vals.items():
            assert v == (Fraction(7, 24) if i in corners else 0)
        assert all(v >= 0 for v in vals.values())

    def test_3x4_minimum_is_floor(self):
        vals = grid_boundary_curvatures(3, 4)
        assert min(vals.values()) == WIDE_GRID_BOUNDARY_FLOOR == Fraction(17, 4830)

    def test_2x2_quarter(self):
        assert set(grid_boundary_curvatures(2, 2).values()) == {Fraction(1, 4)}

    def test_agrees_with_full_vector(self):
        p = compute_curvatures(grid(4, 5))
        vals = grid_boundary_curvatures(4, 5)
        for i, v in vals.items():
            assert v == p.values[i]


class TestVerifyGridTheorem:
    def test_3x3(self):
        rep = verify_grid_theorem(3, 3)
        assert rep.ok
        assert rep.boundary_min == 0
        assert rep.interior_max == Fraction(-1, 6)

    def test_3x4_floor_attained(self):
        rep = verify_grid_theorem(3, 4)
        assert rep.ok
        assert rep.boundary_min == Fraction(17, 4830)

    def test_5x7(self):
        rep = verify_grid_theorem(5, 7)
        assert rep.ok
        assert rep.boundary_min >= Fraction(17, 4830)

    def test_float_rejected(self):
        with pytest.raises(BackendNotExactError):
            verify_grid_theorem(3, 3, "float")

    def test_side_cap(self):
        with pytest.raises(ValueError):
            verify_grid_theorem(3, 13)

    def test_small_grid_rejected(self):
        with pytest.raises(IndexOutOfRangeError):
            verify_grid_theorem(2, 5)


class TestCentralEdge:
    def test_vertices(self):
        assert central_edge(2) == (0, 1)
        assert central_edge(3) == (4, 5)

    def test_first_values(self):
        rows = dict(central_edge_resistance_sweep(3, "exact"))
        assert rows[2] == Fraction(3, 4)
        assert rows[3] == Fraction(7, 12)

    def test_decreasing_toward_half_from_above(self):
        rows = central_edge_resistance_sweep(9)
        values = [v for _, v in rows]
        for a, b in zip(values, values[1:]):
            assert a > b
        assert values[-1] > 0.5

    def test_exact_cap(self):
        with pytest.raises(ValueError):
            central_edge_resistance_sweep(20, "exact")
