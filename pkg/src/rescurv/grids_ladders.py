"""Grids and ladders: generators, exact closed forms, and verification.

For the ladder (the 2 x n grid) the effective resistances across rungs and
rails have closed rational forms driven by the end-rung sequence

    alpha_1 = 1,   alpha_{k+1} = (alpha_k + 2) / (alpha_k + 3),

which decreases strictly to sqrt(3) - 1.  On top of those forms the ladder
curvatures are rational in closed form as well: corners carry
``1 - alpha_n`` and every middle vertex is strictly negative.

For general m x n grids this module verifies, in exact arithmetic, that
interior curvatures are negative and boundary curvatures nonnegative, and
reports the exact boundary minimum (17/4830 for the 3 x 4 grid, which is
the floor over all wider grids).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .curvature import CurvatureVector, compute_curvatures
from .errors import BackendNotExactError, IndexOutOfRangeError
from .families import grid, ladder, path  # noqa: F401  (path/grid are part of the API)
from .products import INTERIOR, ProductDescriptor, classify_boundary_interior
from .spectral import check_backend, effective_resistance

# Exact boundary-curvature floor for grids with a side longer than 3,
# attained at the middle of the short side of the 3 x 4 grid.
WIDE_GRID_BOUNDARY_FLOOR = Fraction(17, 4830)


# ---------------------------------------------------------------------------
# ladders


@dataclass(frozen=True)
class LadderResistanceTable:
    """End-rung resistances alpha_1..alpha_n of ladders of length 1..n."""

    n: int
    alphas: tuple[Fraction, ...]

    def alpha(self, k: int) -> Fraction:
        if not 1 <= k <= self.n:
            raise IndexOutOfRangeError(f"alpha index {k} not in 1..{self.n}")
        return self.alphas[k - 1]


def ladder_alpha(n: int) -> LadderResistanceTable:
    """Iterate the end-rung recurrence exactly up to alpha_n."""
    if n < 1:
        raise IndexOutOfRangeError("ladder length must be >= 1")
    alphas = [Fraction(1)]
    for _ in range(n - 1):
        a = alphas[-1]
        alphas.append((a + 2) / (a + 3))
    return LadderResistanceTable(n, tuple(alphas))


def rung_resistance(n: int, k: int) -> Fraction:
    """Effective resistance across the k-th rung of the 2 x n ladder.

    End rungs (k = 1 or k = n) carry alpha_n.  A middle rung sees the rung
    itself in parallel with the two collapsed side blocks of resistance
    alpha_{k-1} + 2 and alpha_{n-k} + 2.
    """
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"rung index {k} not in 1..{n}")
    table = ladder_alpha(n)
    if k == 1 or k == n:
        return table.alpha(n)
    left = table.alpha(k - 1) + 2
    right = table.alpha(n - k) + 2
    return 1 / (1 + 1 / left + 1 / right)


def rail_resistance(n: int, k: int) -> Fraction:
    """Effective resistance across the (i, k)-th rail of the 2 x n ladder.

    Independent of the side i by symmetry.  The single formula
    ``1 / (1 + 1/(alpha_k + alpha_{n-k} + 1))`` covers the end rails too:
    at k = 1 it collapses to alpha_n through the end-rung recurrence.
    """
    if not 1 <= k <= n - 1:
        raise IndexOutOfRangeError(f"rail index {k} not in 1..{n - 1}")
    table = ladder_alpha(n)
    return 1 / (1 + 1 / (table.alpha(k) + table.alpha(n - k) + 1))


def ladder_curvatures(n: int) -> CurvatureVector:
    """Closed-form exact curvature vector of the 2 x n ladder.

    Vertex (i, k) sits at index i*n + (k-1) for i in {0, 1} and k in 1..n.
    Corners carry 1 - alpha_n; a middle column k carries the negative value

        -(1/2) * ((a+1)(b+1) - 3) / ((a+3)(b+3) - 1)

    with a = alpha_{k-1} and b = alpha_{n-k}.
    """
    if n < 1:
        raise IndexOutOfRangeError("ladder length must be >= 1")
    if n == 1:
        # single edge: both ends carry 1/2
        half = Fraction(1, 2)
        return CurvatureVector("exact", [half, half])
    table = ladder_alpha(n)
    column = []
    for k in range(1, n + 1):
        if k == 1 or k == n:
            column.append(1 - table.alpha(n))
        else:
            a = table.alpha(k - 1)
            b = table.alpha(n - k)
            column.append(
                Fraction(-1, 2) * ((a + 1) * (b + 1) - 3) / ((a + 3) * (b + 3) - 1)
            )
    return CurvatureVector("exact", column + column)


def corner_curvature(n: int) -> Fraction:
    """Curvature at a corner of the 2 x n ladder: 1 - alpha_n for n >= 2."""
    if n == 1:
        return Fraction(1, 2)
    return 1 - ladder_alpha(n).alpha(n)


# ---------------------------------------------------------------------------
# grids


def _grid_descriptor(m: int, n: int) -> ProductDescriptor:
    return ProductDescriptor((path(m), path(n)))


def grid_boundary_curvatures(
    m: int, n: int, backend: str = "exact"
) -> dict[int, Union[Fraction, float]]:
    """Curvature of every boundary vertex of the m x n grid, keyed by index."""
    if m < 2 or n < 2:
        raise IndexOutOfRangeError("grid boundary analysis needs m, n >= 2")
    check_backend(backend)
    labels = classify_boundary_interior(_grid_descriptor(m, n))
    p = compute_curvatures(grid(m, n), backend)
    return {i: p.values[i] for i in range(m * n) if labels[i] != INTERIOR}


@dataclass(frozen=True)
class GridTheoremReport:
    """Sign pattern of an m x n grid's curvature, with the exact boundary minimum."""

    m: int
    n: int
    interior_all_negative: bool
    boundary_all_nonnegative: bool
    boundary_min: Fraction
    boundary_argmin: int
    interior_max: Union[Fraction, None]

    @property
    def ok(self) -> bool:
        return self.interior_all_negative and self.boundary_all_nonnegative


def verify_grid_theorem(
    m: int, n: int, backend: str = "exact", max_side: int = 12
) -> GridTheoremReport:
    """Check the grid sign pattern in exact arithmetic.

    Interior curvatures must be strictly negative and boundary curvatures
    nonnegative.  Exact backend only; dense exact elimination bounds the
    grid side by ``max_side``.
    """
    if backend != "exact":
        raise BackendNotExactError("verify_grid_theorem runs on the exact backend")
    if m < 3 or n < 3:
        raise IndexOutOfRangeError("the grid sign pattern needs m, n >= 3")
    if max(m, n) > max_side:
        raise ValueError(f"grid side {max(m, n)} exceeds max_side={max_side}")
    labels = classify_boundary_interior(_grid_descriptor(m, n))
    p = compute_curvatures(grid(m, n), "exact")
    boundary = [i for i, lab in enumerate(labels) if lab != INTERIOR]
    interior = [i for i, lab in enumerate(labels) if lab == INTERIOR]
    bvals = {i: p.values[i] for i in boundary}
    argmin = min(bvals, key=lambda i: (bvals[i], i))
    return GridTheoremReport(
        m=m,
        n=n,
        interior_all_negative=all(p.values[i] < 0 for i in interior),
        boundary_all_nonnegative=all(bvals[i] >= 0 for i in boundary),
        boundary_min=bvals[argmin],
        boundary_argmin=argmin,
        interior_max=max((p.values[i] for i in interior), default=None),
    )


def central_edge(n: int) -> tuple[int, int]:
    """The most central horizontal edge of the n x n grid.

    For odd n this leaves the unique center vertex; for even n it is the
    middle edge of a middle row.
    """
    if n < 2:
        raise IndexOutOfRangeError("central edge needs n >= 2")
    c = (n - 1) // 2
    return c * n + c, c * n + c + 1


def central_edge_resistance_sweep(
    n_max: int, backend: str = "float", max_exact_side: int = 12
) -> list[tuple[int, Union[Fraction, float]]]:
    """Effective resistance across the central edge of the n x n grid, n = 2..n_max.

    The values decrease strictly with n and approach 1/2 from above, the
    edge resistance of the infinite grid; a finite truncation is a subgraph
    of the infinite grid, so by Rayleigh monotonicity it can only overshoot.
    """
    check_backend(backend)
    if backend == "exact" and n_max > max_exact_side:
        raise ValueError(
            f"exact sweep capped at side {max_exact_side}; use the float backend"
        )
    out = []
    for n in range(2, n_max + 1):
        u, v = central_edge(n)
        out.append((n, effective_resistance(grid(n, n), u, v, backend)))
    return out
