"""Laplacians, pseudoinverses, eigensystems, and effective resistances.

Two scalar backends sit behind one interface.  The ``exact`` backend works
in arbitrary-precision rationals and inverts the shifted Laplacian
``L + J/n`` with fraction-free elimination; the ``float`` backend uses
double precision via NumPy.  The pseudoinverse is recovered as
``(L + J/n)^-1 - J/n``, valid exactly when the graph is connected, and the
effective resistance between x and y is the quadratic form

    omega(x, y) = Lplus[x, x] + Lplus[y, y] - 2 Lplus[x, y].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Union

import numpy as np

from . import _exactla
from .errors import (
    ConvergenceFailureError,
    DisconnectedGraphError,
    IndexOutOfRangeError,
)
from .graph import WeightedGraph

Backend = Literal["exact", "float"]

FLOAT_ATOL = 1e-9  # matrix-identity tolerance for the float backend


def check_backend(backend: str) -> str:
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}; expected 'exact' or 'float'")
    return backend


@dataclass(frozen=True)
class Laplacian:
    """Weighted Laplacian L = D - A with conductances 1/r on the edges."""

    n: int
    backend: str
    entries: Any  # list[list[Fraction]] (exact) or np.ndarray (float)

    def as_array(self) -> np.ndarray:
        if self.backend == "float":
            return self.entries
        return np.array([[float(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class Pseudoinverse:
    """Moore-Penrose pseudoinverse of a connected graph's Laplacian."""

    n: int
    backend: str
    entries: Any

    def as_array(self) -> np.ndarray:
        if self.backend == "float":
            return self.entries
        return np.array([[float(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class ResistanceMatrix:
    """Symmetric matrix of pairwise effective resistances, zero diagonal."""

    n: int
    backend: str
    entries: Any

    def value(self, u: int, v: int):
        return self.entries[u][v]

    def as_array(self) -> np.ndarray:
        if self.backend == "float":
            return self.entries
        return np.array([[float(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class EigenSystem:
    """Full orthonormal eigensystem of a Laplacian, eigenvalues ascending.

    Always double precision: Laplacian spectra are algebraic numbers with
    no exact rational representation in general.
    """

    n: int
    values: np.ndarray
    vectors: np.ndarray  # column j is the eigenvector for values[j]


def laplacian(g: WeightedGraph, backend: str = "exact") -> Laplacian:
    """Weighted Laplacian of ``g`` on the requested backend."""
    check_backend(backend)
    n = g.n
    if backend == "exact":
        rows = [[Fraction(0)] * n for _ in range(n)]
        for u, v, r in g.edges:
            c = 1 / Fraction(r)
            rows[u][u] += c
            rows[v][v] += c
            rows[u][v] -= c
            rows[v][u] -= c
        return Laplacian(n, "exact", rows)
    arr = np.zeros((n, n))
    for u, v, r in g.edges:
        c = float(1 / Fraction(r))
        arr[u, u] += c
        arr[v, v] += c
        arr[u, v] -= c
        arr[v, u] -= c
    return Laplacian(n, "float", arr)


def _support_connected(lap: Laplacian) -> bool:
    """Connectivity of the graph underlying a Laplacian, from its support."""
    n = lap.n
    if n <= 1:
        return True
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rows = lap.entries
    for i in range(n):
        row = rows[i]
        for j in range(i + 1, n):
            if row[j] != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    root = find(0)
    return all(find(i) == root for i in range(n))


def pseudoinverse(lap: Laplacian) -> Pseudoinverse:
    """Pseudoinverse via the shifted inverse ``(L + J/n)^-1 - J/n``.

    The shift is only a rank-one correction of the kernel, so the formula
    requires exactly one zero eigenvalue: disconnected input is an error.
    """
    if not _support_connected(lap):
        raise DisconnectedGraphError("pseudoinverse requires a connected graph")
    n = lap.n
    if lap.backend == "exact":
        s = Fraction(1, n)
        shifted = [[x + s for x in row] for row in lap.entries]
        inv = _exactla.fraction_matrix_inverse(shifted)
        out = [[x - s for x in row] for row in inv]
        return Pseudoinverse(n, "exact", out)
    J = np.full((n, n), 1.0 / n)
    inv = np.linalg.solve(lap.entries + J, np.eye(n))
    return Pseudoinverse(n, "float", inv - J)


def eigensystem(lap: Laplacian) -> EigenSystem:
    """Orthonormal eigensystem, eigenvalues ascending (double precision).

    Exact-backend Laplacians are converted to floats first.  Eigenvector
    signs are normalized so the first nonzero component is positive, which
    keeps output deterministic.
    """
    arr = lap.as_array()
    try:
        values, vectors = np.linalg.eigh(arr)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(str(exc)) from exc
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        nz = np.nonzero(np.abs(col) > 1e-12)[0]
        if nz.size and col[nz[0]] < 0:
            vectors[:, j] = -col
    return EigenSystem(lap.n, values, vectors)


def pseudoinverse_via_eigensystem(es: EigenSystem) -> Pseudoinverse:
    """Spectral-formula pseudoinverse: sum of 1/lambda projectors.

    Numerically independent of the shifted-inverse route; the two agree
    entrywise within FLOAT_ATOL on connected graphs and the test suite
    holds them to that.
    """
    n = es.n
    out = np.zeros((n, n))
    for j in range(n):
        lam = es.values[j]
        if abs(lam) <= 1e-9:
            continue
        v = es.vectors[:, j]
        out += np.outer(v, v) / lam
    return Pseudoinverse(n, "float", out)


def resistance_matrix(lp: Pseudoinverse) -> ResistanceMatrix:
    """All pairwise effective resistances from a pseudoinverse."""
    n = lp.n
    if lp.backend == "exact":
        P = lp.entries
        out = [
            [P[i][i] + P[j][j] - 2 * P[i][j] for j in range(n)] for i in range(n)
        ]
        return ResistanceMatrix(n, "exact", out)
    d = np.diag(lp.entries)
    return ResistanceMatrix(n, "float", d[:, None] + d[None, :] - 2 * lp.entries)


def resistance_matrix_of(g: WeightedGraph, backend: str = "exact") -> ResistanceMatrix:
    """Convenience pipeline: graph -> Laplacian -> pseudoinverse -> resistances."""
    return resistance_matrix(pseudoinverse(laplacian(g, backend)))


def effective_resistance(
    g: WeightedGraph, u: int, v: int, backend: str = "exact"
) -> Union[Fraction, float]:
    """Effective resistance between two vertices.

    Solves one grounded linear system instead of forming the full
    pseudoinverse; agrees with the corresponding ResistanceMatrix entry.
    """
    check_backend(backend)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexOutOfRangeError(f"pair ({u},{v}) outside 0..{g.n - 1}")
    if not g.is_connected():
        raise DisconnectedGraphError("effective resistance requires a connected graph")
    if u == v:
        return Fraction(0) if backend == "exact" else 0.0
    lap = laplacian(g, backend)
    keep = [i for i in range(g.n) if i != v]
    pos = {x: i for i, x in enumerate(keep)}
    if backend == "exact":
        rows = [[lap.entries[a][b] for b in keep] for a in keep]
        rhs = [Fraction(0)] * len(keep)
        rhs[pos[u]] = Fraction(1)
        x = _exactla.fraction_solve(rows, rhs)
        return x[pos[u]]
    sub = lap.entries[np.ix_(keep, keep)]
    rhs = np.zeros(len(keep))
    rhs[pos[u]] = 1.0
    x = np.linalg.solve(sub, rhs)
    return float(x[pos[u]])


def matrix_to_csv(mat: Union[ResistanceMatrix, Pseudoinverse, Laplacian]) -> str:
    """Row-major CSV; exact entries rendered as 'p/q' strings."""
    lines = []
    if mat.backend == "exact":
        for row in mat.entries:
            lines.append(",".join(str(x) for x in row))
    else:
        for row in mat.entries:
            lines.append(",".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"
