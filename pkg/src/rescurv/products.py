"""Cartesian graph products and their spectral structure.

The product of graphs with Laplacians L1, L2 has Laplacian
``L1 (x) id + id (x) L2`` (Kronecker sum), hence eigenpairs
``(lam1 + lam2, v1 (x) v2)``.  Vertex indexing is row-major throughout:
the index of ``(v1, ..., vd)`` is ``sum_k v_k * prod_{j>k} n_j``, which is
exactly the ordering the iterated Kronecker construction induces, so the
combinatorial and spectral routes agree without any permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from .curvature import CurvatureVector, node_curvatures
from .errors import DisconnectedGraphError, NotAPathProductError
from .graph import WeightedGraph
from .spectral import (
    EigenSystem,
    Laplacian,
    check_backend,
    laplacian,
    pseudoinverse,
    resistance_matrix,
)

BOUNDARY = "boundary"
INTERIOR = "interior"


@dataclass(frozen=True)
class ProductDescriptor:
    """Ordered factor list fixing the vertex indexing of a product."""

    factors: tuple[WeightedGraph, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")

    @property
    def total_n(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.n
        return out

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.n for f in self.factors)

    def index(self, coords: Sequence[int]) -> int:
        """Row-major flat index of a coordinate tuple."""
        if len(coords) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} coordinates")
        idx = 0
        for c, f in zip(coords, self.factors):
            if not 0 <= c < f.n:
                raise ValueError(f"coordinate {c} outside factor of size {f.n}")
            idx = idx * f.n + c
        return idx

    def coordinates(self, idx: int) -> tuple[int, ...]:
        """Inverse of :meth:`index`."""
        if not 0 <= idx < self.total_n:
            raise ValueError(f"index {idx} outside 0..{self.total_n - 1}")
        out = []
        for f in reversed(self.factors):
            out.append(idx % f.n)
            idx //= f.n
        return tuple(reversed(out))


def cartesian_product(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """Cartesian product; vertex (a, b) gets index a * g2.n + b.

    Each product edge inherits the resistance of the factor edge it copies.
    """
    n2 = g2.n
    edges = []
    for u, v, r in g1.edges:
        for k in range(n2):
            edges.append((u * n2 + k, v * n2 + k, r))
    for i in range(g1.n):
        base = i * n2
        for u, v, r in g2.edges:
            edges.append((base + u, base + v, r))
    return WeightedGraph(g1.n * n2, tuple(edges))


def product_graph(pd: ProductDescriptor) -> WeightedGraph:
    """d-fold Cartesian product of the descriptor's factors."""
    return reduce(cartesian_product, pd.factors)


def _kron_sum_exact(A: list, B: list) -> list:
    n1, n2 = len(A), len(B)
    n = n1 * n2
    zero = Fraction(0)
    out = [[zero] * n for _ in range(n)]
    for i1 in range(n1):
        for j1 in range(n1):
            a = A[i1][j1]
            if i1 == j1:
                for i2 in range(n2):
                    row = out[i1 * n2 + i2]
                    Bi = B[i2]
                    base = j1 * n2
                    for j2 in range(n2):
                        row[base + j2] = Bi[j2]
                    row[base + i2] += a
            elif a != 0:
                for i2 in range(n2):
                    out[i1 * n2 + i2][j1 * n2 + i2] = a
    return out


def product_laplacian(pd: ProductDescriptor, backend: str = "exact") -> Laplacian:
    """Laplacian of the product via iterated Kronecker sums.

    Entrywise equal to ``laplacian(product_graph(pd))``; building it from
    the factor Laplacians exercises the spectral identity directly.
    """
    check_backend(backend)
    laps = [laplacian(f, backend) for f in pd.factors]
    if backend == "exact":
        entries = reduce(_kron_sum_exact, (l.entries for l in laps))
        return Laplacian(pd.total_n, "exact", entries)
    arrs = [l.entries for l in laps]

    def kron_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.kron(a, np.eye(len(b))) + np.kron(np.eye(len(a)), b)

    return Laplacian(pd.total_n, "float", reduce(kron_sum, arrs))


def product_eigensystem(es1: EigenSystem, es2: EigenSystem) -> EigenSystem:
    """All n1*n2 eigenpairs (lam1 + lam2, v1 (x) v2), re-sorted ascending."""
    n1, n2 = es1.n, es2.n
    values = (es1.values[:, None] + es2.values[None, :]).reshape(-1)
    vectors = np.einsum("ik,jl->ijkl", es1.vectors, es2.vectors).reshape(
        n1 * n2, n1 * n2
    )
    order = np.argsort(values, kind="stable")
    return EigenSystem(n1 * n2, values[order], vectors[:, order])


def product_node_curvatures(pd: ProductDescriptor, backend: str = "exact") -> CurvatureVector:
    """Curvature vector of the full product.

    Runs the product Laplacian (Kronecker route) through pseudoinverse and
    resistance matrix, then sums incident resistances over the product
    graph's edges.
    """
    for k, f in enumerate(pd.factors):
        if not f.is_connected():
            raise DisconnectedGraphError(f"factor {k} is disconnected")
    lap = product_laplacian(pd, backend)
    omega = resistance_matrix(pseudoinverse(lap))
    return node_curvatures(product_graph(pd), omega)


def _require_canonical_path(g: WeightedGraph, which: int) -> None:
    expected = {(i, i + 1) for i in range(g.n - 1)}
    actual = {(u, v) for u, v, _ in g.edges}
    if actual != expected:
        raise NotAPathProductError(
            f"factor {which} is not a consecutively-labeled path"
        )


def classify_boundary_interior(pd: ProductDescriptor) -> list[str]:
    """Per-vertex 'boundary'/'interior' labels for a product of paths.

    A vertex is interior when no coordinate projects to a path endpoint,
    equivalently when its degree is 2d.
    """
    for k, f in enumerate(pd.factors):
        _require_canonical_path(f, k)
    out = []
    for idx in range(pd.total_n):
        coords = pd.coordinates(idx)
        interior = all(
            0 < c < f.n - 1 for c, f in zip(coords, pd.factors)
        )
        out.append(INTERIOR if interior else BOUNDARY)
    return out
