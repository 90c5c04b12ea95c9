"""Node resistance curvature.

The curvature at a vertex x is one minus half the sum of effective
resistances over the edges incident to x:

    p_x = 1 - (1/2) * sum_{y ~ x} omega(x, y)

Over any connected unit-resistance graph the entries of p sum to exactly 1
(the sum of edge resistances over all edges is n - 1 there; with general
resistances that identity, and hence the unit sum, no longer applies to
this plain resistance sum).  The curvature of the whole graph is the least
entry of p.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import numpy as np

from .errors import DimensionMismatchError
from .graph import WeightedGraph
from .spectral import ResistanceMatrix, laplacian, pseudoinverse, resistance_matrix

NEGATIVE = -1
ZERO = 0
POSITIVE = 1


@dataclass(frozen=True)
class CurvatureVector:
    """Per-vertex node resistance curvatures, tagged with their backend."""

    backend: str
    values: Any  # list[Fraction] (exact) or np.ndarray (float)

    @property
    def n(self) -> int:
        return len(self.values)

    def total(self) -> Union[Fraction, float]:
        if self.backend == "exact":
            return sum(self.values, Fraction(0))
        return float(np.sum(self.values))

    def as_floats(self) -> list[float]:
        return [float(x) for x in self.values]

    def to_json_obj(self) -> dict:
        if self.backend == "exact":
            return {str(i): str(x) for i, x in enumerate(self.values)}
        return {str(i): float(x) for i, x in enumerate(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_csv(self) -> str:
        lines = ["vertex,curvature"]
        if self.backend == "exact":
            lines += [f"{i},{x}" for i, x in enumerate(self.values)]
        else:
            lines += [f"{i},{float(x)!r}" for i, x in enumerate(self.values)]
        return "\n".join(lines) + "\n"


def node_curvatures(g: WeightedGraph, omega: ResistanceMatrix) -> CurvatureVector:
    """Curvature vector of ``g`` given its effective-resistance matrix."""
    if omega.n != g.n:
        raise DimensionMismatchError(
            f"graph has {g.n} vertices, resistance matrix has {omega.n}"
        )
    if omega.backend == "exact":
        p = [Fraction(1)] * g.n
        half = Fraction(1, 2)
        for u, v, _ in g.edges:
            w = omega.entries[u][v]
            p[u] -= half * w
            p[v] -= half * w
        return CurvatureVector("exact", p)
    p = np.ones(g.n)
    for u, v, _ in g.edges:
        w = omega.entries[u, v]
        p[u] -= w / 2
        p[v] -= w / 2
    return CurvatureVector("float", p)


def compute_curvatures(g: WeightedGraph, backend: str = "exact") -> CurvatureVector:
    """One-call pipeline from a graph to its curvature vector."""
    omega = resistance_matrix(pseudoinverse(laplacian(g, backend)))
    return node_curvatures(g, omega)


def graph_curvature(p: CurvatureVector) -> Union[Fraction, float]:
    """Least entry of the curvature vector."""
    return min(p.values)


def sign_classify(p: CurvatureVector, epsilon: Union[Fraction, float] = 0) -> list[int]:
    """Entrywise sign, with |x| <= epsilon mapped to 0.

    Returns -1/0/+1 per vertex.  The exact backend admits only epsilon = 0;
    a nonzero tolerance would misrepresent exact arithmetic.
    """
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    if p.backend == "exact" and epsilon != 0:
        raise ValueError("exact backend requires epsilon = 0")
    out = []
    for x in p.values:
        if x > epsilon:
            out.append(POSITIVE)
        elif x < -epsilon:
            out.append(NEGATIVE)
        else:
            out.append(ZERO)
    return out
