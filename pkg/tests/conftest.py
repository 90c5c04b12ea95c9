"""Shared randomized-graph generators for the test suite.

Everything is seeded by the caller so failures reproduce exactly.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from rescurv import WeightedGraph, build_graph


def random_connected_graph(
    rng: Random, n_min: int = 2, n_max: int = 12, weighted: bool = False
) -> WeightedGraph:
    """Random connected simple graph: a random spanning tree plus extras."""
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    pairs = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = order[i], order[j]
        pairs.add((min(u, v), max(u, v)))
    for _ in range(rng.randint(0, n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            pairs.add((min(u, v), max(u, v)))
    if weighted:
        edges = [
            (u, v, Fraction(rng.randint(1, 5), rng.randint(1, 5))) for u, v in sorted(pairs)
        ]
    else:
        edges = sorted(pairs)
    return build_graph(n, edges)


def deletable_edge(rng: Random, g: WeightedGraph):
    """A random edge whose removal keeps the graph connected, or None."""
    candidates = list(g.edges)
    rng.shuffle(candidates)
    for u, v, _ in candidates:
        if g.delete_edge(u, v).is_connected():
            return (u, v)
    return None
