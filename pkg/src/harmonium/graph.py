"""Immutable simple-graph type and BFS-based metric queries.

Vertices are dense ids 0..n-1. Edges are stored both as a frozenset of
ordered pairs (u < v) and as per-vertex sorted neighbor tuples; neighbor
iteration order is ascending id, which downstream greedy code relies on
for determinism.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

#: Marker reported as the diameter of a disconnected graph.
DISCONNECTED = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending lexicographic order."""
        return sorted(self.edges)


@dataclass(frozen=True)
class GraphStats:
    m: int
    max_degree: int
    diameter: int  # DISCONNECTED when the graph is not connected
    degree_sequence: tuple[int, ...]

    @property
    def connected(self) -> bool:
        return self.diameter != DISCONNECTED


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from (possibly duplicated) vertex-id pairs.

    Rejects self-loops and out-of-range ids; duplicate pairs collapse.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    edges = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"self-loop ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        edges.add((min(u, v), max(u, v)))
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    adj = tuple(tuple(sorted(ns)) for ns in neighbors)
    return Graph(n=n, edges=frozenset(edges), adj=adj)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def stats(g: Graph) -> GraphStats:
    """Edge count, max degree, degree sequence and BFS-exact diameter."""
    degs = tuple(g.degree(v) for v in range(g.n))
    diameter = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc = max(dist)
        if min(dist) < 0:  # unreachable vertex
            diameter = DISCONNECTED
            break
        diameter = max(diameter, ecc)
    if g.n == 0:
        diameter = 0
    return GraphStats(
        m=g.m,
        max_degree=max(degs, default=0),
        diameter=diameter,
        degree_sequence=degs,
    )


def closed_n2(g: Graph, v: int) -> set[int]:
    """The set {u : d(u, v) <= 2}, including v itself."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    dist = bfs_distances(g, v)
    return {u for u in range(g.n) if 0 <= dist[u] <= 2}


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical on-disk format: `n m` header then `u v` lines.

    Lines starting with `#` are comments and ignored.
    """
    rows = [
        line.split()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise ValueError(f"expected header 'n m', got {' '.join(header)!r}")
    n, m = int(header[0]), int(header[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(rows) - 1}")
    pairs = [(int(r[0]), int(r[1])) for r in rows[1:]]
    g = from_edge_list(n, pairs)
    if g.m != m:
        raise ValueError(f"edge list contains duplicates: {m} declared, {g.m} distinct")
    return g


def emit_edge_list(g: Graph) -> str:
    """Serialize to the canonical format; inverse of parse_edge_list."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"
