"""General bounds on edge resistance in a Cartesian product.

For a product edge copying the factor edge e1 (with in-factor effective
resistance ``w``) into the copy at vertex v2 of the second factor:

* upper bound (regular-tree embedding, depth 1): a star of degree
  d = deg(v2) always embeds at v2 as a subgraph, so by Rayleigh
  monotonicity the series-parallel value of edge-times-star bounds the
  product edge resistance from above:

      ub = w * (1 + 2/w) / (d + 1 + 2/w)

* lower bound (spectral casework on factor eigenpairs):

      lb = (1/n2 + (1 - 1/n2) * lam2_1 / (lam2_1 + lammax_2)) * w

  with lam2_1 the algebraic connectivity of the first factor and lammax_2
  the largest Laplacian eigenvalue of the second.

The deeper-tree recurrence behind the upper bound is also provided, in the
two root conventions it admits; the depth-1 star case of the root-full-
degree variant reproduces ``upper_bound_ub``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .eigenbounds import (
    DEFAULT_WIDTH,
    Enclosure,
    laplacian_spectral_enclosures,
)
from .errors import DisconnectedGraphError
from .graph import WeightedGraph
from .products import ProductDescriptor, product_graph
from .spectral import check_backend, laplacian, resistance_matrix_of

Number = Union[Fraction, float]

# A lower-bound bracket still straddling the measured resistance at this
# width is reported as saturated (equality within 2**-192) rather than as a
# violation; the bound formulas cannot be exceeded by less than this except
# at genuine equality.
SATURATION_WIDTH = Fraction(1, 2**192)


@dataclass(frozen=True)
class TreeBoundParams:
    """Inputs for the regular-tree upper-bound recurrence."""

    omega: Number
    degree: int
    depth: int

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")


def tree_bound(params: TreeBoundParams, root_full_degree: bool = True) -> Number:
    """Resistance across the root edge of (edge of resistance omega) x (tree).

    Iterates f(0) = omega, f(k) = 1 / (1/omega + (d-1) / (2 + f(k-1))).
    With ``root_full_degree`` the last level uses d branches instead of
    d - 1 (the root of a d-regular tree has d children, inner vertices
    d - 1); at depth 1 that variant equals :func:`upper_bound_ub`.  The
    literal variant applies d - 1 at every level including the root.
    """
    w = params.omega
    one = Fraction(1) if isinstance(w, (Fraction, int)) else 1.0
    f = w
    for level in range(1, params.depth + 1):
        branches = params.degree if (root_full_degree and level == params.depth) else params.degree - 1
        f = one / (one / w + branches / (2 + f))
    return f


def upper_bound_ub(omega: Number, d: int) -> Number:
    """Depth-1 star upper bound: omega * (1 + 2/omega) / (d + 1 + 2/omega)."""
    if omega <= 0:
        raise ValueError("omega must be positive")
    if d < 1:
        raise ValueError("d must be >= 1")
    return omega * (omega + 2) / (omega * (d + 1) + 2)


def lower_bound_lb(
    omega: Number, lambda2_1: Number, lambdamax_2: Number, n2: int
) -> Number:
    """Spectral lower bound on the product edge resistance."""
    if n2 < 1:
        raise ValueError("n2 must be >= 1")
    if lambda2_1 <= 0:
        raise ValueError("lambda2 of the first factor must be positive")
    if lambdamax_2 < 0:
        raise ValueError("lambdamax must be nonnegative")
    one = (
        Fraction(1)
        if all(isinstance(x, (Fraction, int)) for x in (omega, lambda2_1, lambdamax_2))
        else 1.0
    )
    inv = one / n2
    return (inv + (one - inv) * lambda2_1 / (lambda2_1 + lambdamax_2)) * omega


@dataclass(frozen=True)
class EdgeBoundRecord:
    """One product edge checked against both bounds."""

    direction: int  # 1: edge copies a factor-1 edge, 2: a factor-2 edge
    factor_edge: tuple[int, int]
    copy_at: int  # vertex of the other factor selecting the copy
    product_edge: tuple[int, int]
    actual: Number
    omega_factor: Number
    lb_lo: Number
    lb_hi: Number
    lb_exact: bool
    ub: Number
    holds_lb: bool
    holds_ub: bool
    saturated_lb: bool


@dataclass(frozen=True)
class BoundsReport:
    records: tuple[EdgeBoundRecord, ...]

    @property
    def all_lower_hold(self) -> bool:
        return all(r.holds_lb for r in self.records)

    @property
    def all_upper_hold(self) -> bool:
        return all(r.holds_ub for r in self.records)

    @property
    def ok(self) -> bool:
        return self.all_lower_hold and self.all_upper_hold


def _lb_bracket(
    omega: Fraction, lam2: Enclosure, lammax: Enclosure, n2: int
) -> tuple[Fraction, Fraction, bool]:
    """Certified bracket for the lower bound from eigenvalue brackets.

    The bound grows with lambda2 and shrinks with lambdamax, so the ends of
    the bracket come from opposite corners of the eigenvalue box.
    """
    if lam2.lo == 0:
        # limiting value of the formula as lambda2 drops to 0
        lo = omega * Fraction(1, n2)
    else:
        lo = lower_bound_lb(omega, lam2.lo, lammax.hi, n2)
    hi = lower_bound_lb(omega, lam2.hi, lammax.lo, n2)
    return lo, hi, lam2.exact and lammax.exact


def _check_direction(
    records: list[EdgeBoundRecord],
    direction: int,
    g_edge: WeightedGraph,
    g_copy: WeightedGraph,
    omega_product,
    index_of,
    lam2: Optional[Enclosure],
    lammax: Optional[Enclosure],
    backend: str,
    float_slack: float,
) -> None:
    omega_factor = resistance_matrix_of(g_edge, backend)
    if backend == "float":
        ev_edge = np.linalg.eigvalsh(laplacian(g_edge, "float").entries)
        ev_copy = np.linalg.eigvalsh(laplacian(g_copy, "float").entries)
        lam2_f, lammax_f = float(ev_edge[1]), float(ev_copy[-1])
    degrees = [g_copy.degree(k) for k in range(g_copy.n)]
    for (u, v, _r) in g_edge.edges:
        w = omega_factor.value(u, v)
        if backend == "exact":
            lb_lo, lb_hi, lb_exact = _lb_bracket(w, lam2, lammax, g_copy.n)
        else:
            lb = lower_bound_lb(w, lam2_f, lammax_f, g_copy.n)
            lb_lo = lb_hi = lb
            lb_exact = False
        for k in range(g_copy.n):
            a, b = index_of(u, k), index_of(v, k)
            actual = omega_product.value(a, b)
            ub = upper_bound_ub(w, degrees[k]) if degrees[k] >= 1 else None
            if backend == "exact":
                saturated = False
                if lb_hi <= actual:
                    holds_lb = True
                elif lb_lo > actual:
                    holds_lb = False
                else:
                    # bracket straddles the measured value: equality case
                    holds_lb = (lb_hi - lb_lo) <= SATURATION_WIDTH or lb_exact
                    saturated = holds_lb
                if lb_exact and lb_lo == actual:
                    saturated = True
                holds_ub = ub is None or actual <= ub
            else:
                holds_lb = actual >= lb_lo - float_slack
                holds_ub = ub is None or actual <= ub + float_slack
                saturated = False
            records.append(
                EdgeBoundRecord(
                    direction=direction,
                    factor_edge=(u, v),
                    copy_at=k,
                    product_edge=(a, b),
                    actual=actual,
                    omega_factor=w,
                    lb_lo=lb_lo,
                    lb_hi=lb_hi,
                    lb_exact=lb_exact,
                    ub=ub,
                    holds_lb=holds_lb,
                    holds_ub=holds_ub,
                    saturated_lb=saturated,
                )
            )


def validate_bounds(
    g1: WeightedGraph,
    g2: WeightedGraph,
    backend: str = "exact",
    both_directions: bool = False,
    width: Fraction = DEFAULT_WIDTH,
    float_slack: float = 1e-9,
) -> BoundsReport:
    """Measure every product edge of g1 x g2 against the two bounds.

    By default the report covers the edges copying factor-1 edges; with
    ``both_directions`` the factor-2 family is included too (with the roles
    of the factors swapped in the formulas), which covers every edge of the
    product.  ``omega`` in the lower bound is the effective resistance of
    the factor edge within its own factor.
    """
    check_backend(backend)
    for name, g in (("g1", g1), ("g2", g2)):
        if not g.is_connected():
            raise DisconnectedGraphError(f"{name} must be connected")
    pd = ProductDescriptor((g1, g2))
    prod = product_graph(pd)
    omega_product = resistance_matrix_of(prod, backend)
    n2 = g2.n
    records: list[EdgeBoundRecord] = []

    lam2_1 = lammax_2 = lam2_2 = lammax_1 = None
    if backend == "exact":
        if g1.edges:
            enc1 = laplacian_spectral_enclosures(g1, width)
            enc2 = laplacian_spectral_enclosures(g2, width)
            lam2_1, lammax_2 = enc1.lambda2, enc2.lambda_max
            lam2_2, lammax_1 = enc2.lambda2, enc1.lambda_max
        elif both_directions and g2.edges:
            enc1 = laplacian_spectral_enclosures(g1, width)
            enc2 = laplacian_spectral_enclosures(g2, width)
            lam2_2, lammax_1 = enc2.lambda2, enc1.lambda_max

    if g1.edges:
        _check_direction(
            records, 1, g1, g2, omega_product,
            lambda u, k: u * n2 + k,
            lam2_1, lammax_2, backend, float_slack,
        )
    if both_directions and g2.edges:
        _check_direction(
            records, 2, g2, g1, omega_product,
            lambda u, k: k * n2 + u,
            lam2_2, lammax_1, backend, float_slack,
        )
    return BoundsReport(tuple(records))
