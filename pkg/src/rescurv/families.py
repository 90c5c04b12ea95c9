"""Named graph families and the generator shorthand parser.

Shorthand grammar (case-insensitive): ``P<n>`` path, ``C<n>`` cycle,
``K<n>`` complete, ``Q<d>`` hypercube, ``S<k>`` star with k leaves;
``x`` takes Cartesian products and ``^`` repeats a factor, so ``P3^3``
is the 3x3x3 grid and ``C5xP2`` the pentagonal prism.
"""

from __future__ import annotations

import re
from functools import reduce

from .graph import WeightedGraph, build_graph
from .products import ProductDescriptor, cartesian_product

_TOKEN = re.compile(r"^([PCKQS])(\d+)(?:\^(\d+))?$", re.IGNORECASE)


def path(n: int) -> WeightedGraph:
    """Path on n vertices, unit resistances."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> WeightedGraph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> WeightedGraph:
    """Star with the hub at index 0 and the given number of leaves."""
    if leaves < 1:
        raise ValueError("a star needs at least 1 leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def hypercube(d: int) -> WeightedGraph:
    """d-dimensional hypercube as the d-fold product of single edges."""
    if d < 1:
        raise ValueError("hypercube dimension must be >= 1")
    return reduce(cartesian_product, [path(2)] * d)


def grid(m: int, n: int) -> WeightedGraph:
    """m x n grid; vertex (i, j) has index i*n + j."""
    if m < 1 or n < 1:
        raise ValueError("grid sides must be >= 1")
    return cartesian_product(path(m), path(n))


def ladder(n: int) -> WeightedGraph:
    """The 2 x n grid; vertex (i, k) has index i*n + k."""
    return grid(2, n)


def _atom(token: str) -> WeightedGraph:
    m = _TOKEN.match(token)
    if not m:
        raise ValueError(f"cannot parse graph shorthand {token!r}")
    kind, size = m.group(1).upper(), int(m.group(2))
    if kind == "P":
        g = path(size)
    elif kind == "C":
        g = cycle(size)
    elif kind == "K":
        g = complete(size)
    elif kind == "Q":
        g = hypercube(size)
    else:
        g = star(size)
    return g


def parse_product_spec(spec: str) -> ProductDescriptor:
    """Parse shorthand like ``P3xP4`` or ``P3^3`` into an ordered factor list."""
    factors: list[WeightedGraph] = []
    for token in spec.replace(" ", "").split("x"):
        if not token:
            raise ValueError(f"empty factor in {spec!r}")
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"cannot parse graph shorthand {token!r}")
        power = int(m.group(3)) if m.group(3) else 1
        if power < 1:
            raise ValueError(f"power must be >= 1 in {token!r}")
        base = _atom(f"{m.group(1)}{m.group(2)}")
        factors.extend([base] * power)
    return ProductDescriptor(tuple(factors))


def parse_graph_spec(spec: str) -> WeightedGraph:
    """Parse shorthand into the (product) graph it denotes."""
    pd = parse_product_spec(spec)
    return reduce(cartesian_product, pd.factors)
