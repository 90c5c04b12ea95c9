"""Undirected simple graphs with positive rational edge resistances.

Vertices are dense integer indices ``0..n-1``.  Resistances are stored as
:class:`fractions.Fraction` so the exact backend never sees a rounded value;
an absent resistance means the unit resistance 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Union

from .errors import (
    DuplicateEdgeError,
    IndexOutOfRangeError,
    NonpositiveResistanceError,
    NoSuchEdgeError,
    SelfLoopError,
)

ResistanceLike = Union[int, str, float, Fraction]
Edge = tuple[int, int, Fraction]


def as_resistance(value: ResistanceLike) -> Fraction:
    """Coerce a resistance to an exact positive Fraction.

    Accepts integers, Fractions, strings like ``"3/4"`` or ``"0.25"``, and
    floats (floats are read back through their decimal representation, so
    ``0.1`` means one tenth).
    """
    if isinstance(value, bool):
        raise NonpositiveResistanceError(f"not a resistance: {value!r}")
    if isinstance(value, float):
        value = str(value)
    try:
        r = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise NonpositiveResistanceError(f"not a resistance: {value!r}") from exc
    if r <= 0:
        raise NonpositiveResistanceError(f"resistance must be positive, got {r}")
    return r


def format_resistance(r: Fraction) -> Union[int, str]:
    """Render a resistance for serialization: int when integral, else 'p/q'."""
    if r.denominator == 1:
        return int(r)
    return str(r)


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable simple graph; every edge carries a positive resistance.

    Edges are stored with ``u < v``.  Instances are safe to share across
    threads; all operations return new graphs.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
        adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.n)]
        for u, v, r in self.edges:
            adj[u].append((v, r))
            adj[v].append((u, r))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], Fraction]:
        return {(u, v): r for u, v, r in self.edges}

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRangeError(f"vertex {v} not in 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        """Number of incident edges; resistances do not enter."""
        self._check_vertex(v)
        return len(self._adjacency[v])

    def neighbors(self, v: int) -> tuple[tuple[int, Fraction], ...]:
        """Pairs (neighbor, edge resistance) incident to v."""
        self._check_vertex(v)
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def resistance(self, u: int, v: int) -> Fraction:
        """Nominal resistance of the edge u-v (not the effective resistance)."""
        self._check_vertex(u)
        self._check_vertex(v)
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise NoSuchEdgeError(f"no edge {u}-{v}") from None

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for y, _ in self._adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == self.n

    def delete_edge(self, u: int, v: int) -> "WeightedGraph":
        """New graph without the edge u-v; this graph is unchanged."""
        self._check_vertex(u)
        self._check_vertex(v)
        key = (min(u, v), max(u, v))
        if key not in self._edge_index:
            raise NoSuchEdgeError(f"no edge {u}-{v}")
        kept = tuple(e for e in self.edges if (e[0], e[1]) != key)
        return WeightedGraph(self.n, kept)

    def add_edge(self, u: int, v: int, r: ResistanceLike = 1) -> "WeightedGraph":
        """New graph with the extra edge u-v."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in self._edge_index:
            raise DuplicateEdgeError(f"edge {u}-{v} already present")
        return WeightedGraph(self.n, self.edges + ((key[0], key[1], as_resistance(r)),))

    def edge_count(self) -> int:
        return len(self.edges)

    def is_unit_resistance(self) -> bool:
        return all(r == 1 for _, _, r in self.edges)


def build_graph(
    n: int, edges: Iterable[Union[tuple[int, int], tuple[int, int, ResistanceLike]]]
) -> WeightedGraph:
    """Validate and construct a :class:`WeightedGraph`.

    ``edges`` holds ``(u, v)`` or ``(u, v, r)`` tuples; omitted resistances
    default to 1.  Raises on self-loops, duplicate pairs, indices out of
    range, and nonpositive resistances.
    """
    if n < 1:
        raise IndexOutOfRangeError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    out: list[Edge] = []
    for e in edges:
        if len(e) == 2:
            u, v = e  # type: ignore[misc]
            r: ResistanceLike = 1
        else:
            u, v, r = e  # type: ignore[misc]
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        out.append((key[0], key[1], as_resistance(r)))
    return WeightedGraph(n, tuple(out))


# ---------------------------------------------------------------------------
# serialization


def graph_to_json_obj(g: WeightedGraph) -> dict:
    return {
        "n": g.n,
        "edges": [{"u": u, "v": v, "r": format_resistance(r)} for u, v, r in g.edges],
    }


def graph_from_json_obj(obj: dict) -> WeightedGraph:
    edges = [(e["u"], e["v"], e.get("r", 1)) for e in obj["edges"]]
    return build_graph(obj["n"], edges)


def graph_to_json(g: WeightedGraph) -> str:
    return json.dumps(graph_to_json_obj(g), indent=2)


def graph_from_json(text: str) -> WeightedGraph:
    # parse_float keeps decimal literals exact instead of going through binary
    return graph_from_json_obj(json.loads(text, parse_float=Fraction))


def graph_to_csv(g: WeightedGraph) -> str:
    lines = [f"{u},{v},{format_resistance(r)}" for u, v, r in g.edges]
    return "\n".join(lines) + "\n"


def graph_from_csv(text: str) -> WeightedGraph:
    """Edge list ``u,v[,r]`` per line; vertex count is max index + 1."""
    edges: list[tuple[int, int, ResistanceLike]] = []
    top = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'u,v[,r]', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        top = max(top, u, v)
        edges.append((u, v, parts[2]) if len(parts) == 3 else (u, v))
    return build_graph(top + 1, edges)


def load_graph(path: Union[str, Path]) -> WeightedGraph:
    """Read a graph from a ``.json`` or ``.csv`` file (by extension)."""
    p = Path(path)
    text = p.read_text()
    if p.suffix.lower() == ".json":
        return graph_from_json(text)
    if p.suffix.lower() == ".csv":
        return graph_from_csv(text)
    raise ValueError(f"unsupported graph file extension: {p.suffix!r}")


def save_graph(g: WeightedGraph, path: Union[str, Path]) -> None:
    p = Path(path)
    if p.suffix.lower() == ".json":
        p.write_text(graph_to_json(g))
    elif p.suffix.lower() == ".csv":
        p.write_text(graph_to_csv(g))
    else:
        raise ValueError(f"unsupported graph file extension: {p.suffix!r}")
