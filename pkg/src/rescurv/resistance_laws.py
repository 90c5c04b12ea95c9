"""Independent oracles for effective resistance.

Two routes that never touch the spectral machinery:

* series/parallel reduction of a two-terminal network (series resistances
  add, parallel conductances add; neither law changes any other effective
  resistance), which computes the terminal resistance exactly whenever the
  network is series-parallel reducible, and

* a commute-time Monte Carlo estimator: on a unit-resistance connected
  graph the expected round-trip time of the simple random walk between u
  and v equals ``2 |E| * omega(u, v)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import NamedTuple, Optional, Sequence, Union

from . import _exactla, commute
from .errors import (
    DisconnectedGraphError,
    DisconnectedTerminalsError,
    IndexOutOfRangeError,
    NonpositiveResistanceError,
    SelfLoopError,
)
from .graph import ResistanceLike, WeightedGraph, as_resistance

MultiEdge = tuple[int, int, Fraction]


@dataclass(frozen=True)
class TerminalNetwork:
    """Two-terminal multigraph with positive edge resistances.

    Parallel edges are allowed (the parallel law operates on them); vertex
    ids stay stable under reduction, so eliminated vertices simply stop
    appearing in the edge list.
    """

    n: int
    edges: tuple[MultiEdge, ...]
    s: int
    t: int


def terminal_network(
    n: int,
    edges: Sequence[Union[tuple[int, int], tuple[int, int, ResistanceLike]]],
    s: int,
    t: int,
) -> TerminalNetwork:
    """Validated constructor; multi-edges permitted, self-loops not."""
    if not (0 <= s < n and 0 <= t < n):
        raise IndexOutOfRangeError(f"terminals ({s},{t}) outside 0..{n - 1}")
    if s == t:
        raise IndexOutOfRangeError("terminals must be distinct")
    out: list[MultiEdge] = []
    for e in edges:
        u, v = e[0], e[1]
        r = e[2] if len(e) == 3 else 1
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        out.append((min(u, v), max(u, v), as_resistance(r)))
    return TerminalNetwork(n, tuple(out), s, t)


def network_from_graph(g: WeightedGraph, s: int, t: int) -> TerminalNetwork:
    return terminal_network(g.n, g.edges, s, t)


def series_reduce(net: TerminalNetwork) -> TerminalNetwork:
    """Eliminate every non-terminal degree-2 vertex, summing its two resistances.

    Elimination can expose new degree-2 vertices, so the pass repeats until
    none remain.  When both incident edges lead to the same neighbor the
    merged edge would be a self-loop, which carries no current and is
    dropped.
    """
    edges = list(net.edges)
    while True:
        deg: dict[int, int] = {}
        for u, v, _ in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        victim = next(
            (
                v
                for v, d in sorted(deg.items())
                if d == 2 and v != net.s and v != net.t
            ),
            None,
        )
        if victim is None:
            break
        incident = [i for i, e in enumerate(edges) if victim in (e[0], e[1])]
        (i1, i2) = incident
        e1, e2 = edges[i1], edges[i2]
        a = e1[0] if e1[1] == victim else e1[1]
        b = e2[0] if e2[1] == victim else e2[1]
        merged = None if a == b else (min(a, b), max(a, b), e1[2] + e2[2])
        edges = [e for i, e in enumerate(edges) if i not in (i1, i2)]
        if merged is not None:
            edges.append(merged)
    return TerminalNetwork(net.n, tuple(edges), net.s, net.t)


def parallel_reduce(net: TerminalNetwork) -> TerminalNetwork:
    """Merge every bundle of parallel edges into one, adding conductances."""
    conductance: dict[tuple[int, int], Fraction] = {}
    for u, v, r in net.edges:
        key = (u, v)
        conductance[key] = conductance.get(key, Fraction(0)) + 1 / r
    edges = tuple((u, v, 1 / c) for (u, v), c in conductance.items())
    return TerminalNetwork(net.n, edges, net.s, net.t)


def _terminals_connected(net: TerminalNetwork) -> bool:
    parent = list(range(net.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in net.edges:
        parent[find(u)] = find(v)
    return find(net.s) == find(net.t)


def reduce_to_resistance(net: TerminalNetwork) -> Optional[Fraction]:
    """Alternate the two laws to a fixed point.

    Returns the exact terminal resistance when the network collapses to a
    single s-t edge, or None when it gets stuck (the network is not
    series-parallel between its terminals; no Y-Delta moves are attempted).
    """
    if not _terminals_connected(net):
        raise DisconnectedTerminalsError(
            f"terminals {net.s} and {net.t} are not connected"
        )
    current = net
    while True:
        before = len(current.edges)
        current = parallel_reduce(series_reduce(current))
        if len(current.edges) == before:
            break
    if len(current.edges) == 1:
        u, v, r = current.edges[0]
        if {u, v} == {net.s, net.t}:
            return r
    return None


def network_spectral_resistance(net: TerminalNetwork) -> Fraction:
    """Exact terminal resistance of a multigraph network, spectrally.

    Builds the weighted Laplacian of the component containing the terminals
    (parallel edges simply add their conductances entrywise), grounds it at
    t, and solves one linear system.  Works whether or not the network is
    series-parallel, so it serves as the independent cross-check for
    :func:`reduce_to_resistance`.
    """
    if not _terminals_connected(net):
        raise DisconnectedTerminalsError(
            f"terminals {net.s} and {net.t} are not connected"
        )
    # restrict to the terminal component so grounding leaves a nonsingular system
    component = {net.s}
    adj: dict[int, list[int]] = {}
    for u, v, _ in net.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    stack = [net.s]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in component:
                component.add(y)
                stack.append(y)
    vertices = sorted(component)
    pos = {x: i for i, x in enumerate(vertices)}
    m = len(vertices)
    L = [[Fraction(0)] * m for _ in range(m)]
    for u, v, r in net.edges:
        if u in component:
            c = 1 / r
            iu, iv = pos[u], pos[v]
            L[iu][iu] += c
            L[iv][iv] += c
            L[iu][iv] -= c
            L[iv][iu] -= c
    keep = [i for i in range(m) if i != pos[net.t]]
    rows = [[L[a][b] for b in keep] for a in keep]
    rhs = [Fraction(0)] * len(keep)
    source = keep.index(pos[net.s])
    rhs[source] = Fraction(1)
    x = _exactla.fraction_solve(rows, rhs)
    return x[source]


def random_series_parallel(
    rng: Random, max_edges: int = 32
) -> tuple[TerminalNetwork, Fraction]:
    """Random two-terminal series-parallel network with rational resistances.

    Built top-down by recursive series/parallel composition, so the exact
    terminal resistance is known by construction and returned alongside.
    Reproducible for a fixed ``rng`` state.
    """
    if max_edges < 1:
        raise ValueError("max_edges must be >= 1")
    target = rng.randint(1, max_edges)

    def build(k: int) -> tuple[int, list[MultiEdge], int, int, Fraction]:
        if k == 1:
            r = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            return 2, [(0, 1, r)], 0, 1, r
        a = rng.randint(1, k - 1)
        n1, e1, s1, t1, r1 = build(a)
        n2, e2, s2, t2, r2 = build(k - a)
        if rng.random() < 0.5:
            # series: right block's source is glued onto the left sink
            relabel = {}
            nxt = n1
            for x in range(n2):
                if x == s2:
                    relabel[x] = t1
                else:
                    relabel[x] = nxt
                    nxt += 1
            edges = e1 + [
                (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]), r)
                for u, v, r in e2
            ]
            return nxt, edges, s1, relabel[t2], r1 + r2
        # parallel: both terminal pairs are glued
        relabel = {}
        nxt = n1
        for x in range(n2):
            if x == s2:
                relabel[x] = s1
            elif x == t2:
                relabel[x] = t1
            else:
                relabel[x] = nxt
                nxt += 1
        edges = e1 + [
            (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]), r)
            for u, v, r in e2
        ]
        return nxt, edges, s1, t1, 1 / (1 / r1 + 1 / r2)

    n, edges, s, t, resistance = build(target)
    return TerminalNetwork(n, tuple(edges), s, t), resistance


class MCEstimate(NamedTuple):
    estimate: float
    stderr: float


def mc_effective_resistance(
    g: WeightedGraph, u: int, v: int, walks: int, seed: int
) -> MCEstimate:
    """Monte Carlo effective resistance via commute times.

    Runs ``walks`` independent round trips u -> v -> u of the simple random
    walk and divides the mean round-trip length by 2|E|.  Unit resistances
    only.  Deterministic given ``seed``: each walk draws from its own
    counter-derived stream, so the result does not depend on batching or on
    which kernel (compiled or pure) is active.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexOutOfRangeError(f"pair ({u},{v}) outside 0..{g.n - 1}")
    if u == v:
        raise IndexOutOfRangeError("endpoints must be distinct")
    if walks < 1:
        raise ValueError("walks must be >= 1")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    if not g.is_unit_resistance():
        raise NonpositiveResistanceError(
            "commute-time estimator requires unit resistances"
        )
    if not g.is_connected():
        raise DisconnectedGraphError("Monte Carlo walk requires a connected graph")
    indptr, nbrs = commute.adjacency_csr(g)
    total, total_sq = commute.commute_moments(indptr, nbrs, u, v, walks, seed)
    denom = 2 * g.edge_count()
    estimate = total / walks / denom
    if walks > 1:
        # sample variance of the round-trip lengths, kept in exact ints
        num = walks * total_sq - total * total
        var = num / walks / (walks - 1)
        stderr = math.sqrt(max(var, 0.0) / walks) / denom
    else:
        stderr = float("nan")
    return MCEstimate(estimate, stderr)
