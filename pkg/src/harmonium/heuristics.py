"""Greedy coloring, the vertex-cover-based coloring, and the small
exact vertex-cover / independent-set searches the reduction leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, stats
from .verify import Coloring

EXACT_SEARCH_MAX_N = 20


@dataclass(frozen=True)
class VertexCoverResult:
    cover: frozenset[int]
    method: str  # "exact" | "matching_2approx"

    @property
    def size(self) -> int:
        return len(self.cover)


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def greedy(g: Graph, order: list[int]) -> Coloring:
    """Color vertices in the given order with the smallest harmonious color.

    Besides properness and pair uniqueness, a candidate color is rejected
    if some already-colored vertex with that color shares an *uncolored*
    neighbor with v: otherwise that neighbor would later see two
    same-colored neighbors and have no feasible color at all. With this
    rule the colored neighbors of every vertex carry distinct colors, so
    a fresh color always works and the scan terminates.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    colors = [0] * g.n
    used_pairs: set[tuple[int, int]] = set()
    # colors held by a vertex two steps away through a then-uncolored middle
    blocked: list[set[int]] = [set() for _ in range(g.n)]
    for v in order:
        nbr_colors = [colors[u] for u in g.adj[v] if colors[u] > 0]
        c = 0
        while True:
            c += 1
            if c in nbr_colors or c in blocked[v]:
                continue
            new_pairs = {_pair(c, cu) for cu in nbr_colors}
            if len(new_pairs) == len(nbr_colors) and not (new_pairs & used_pairs):
                break
        colors[v] = c
        used_pairs |= {_pair(c, cu) for cu in nbr_colors}
        for x in g.adj[v]:
            if colors[x] == 0:
                for w in g.adj[x]:
                    if w != v and colors[w] == 0:
                        blocked[w].add(c)
    return Coloring(tuple(colors))


def adversarial_good_coloring(N: int) -> Coloring:
    """Harmonious coloring of adversarial_tree(N) with at most 2N-2 colors.

    Root gets 1, the a-layer vertices 2..N-1 get colors 2..N-1, the
    b-layer gets N+1..2N-2, and each leaf block reuses {1..N} minus its
    grandparent's color. Vertex a_1 (id 1) has no forced color; it takes
    the first color in 1..2N-2 that keeps the coloring harmonious.
    """
    from .families import adversarial_tree
    from .verify import is_harmonious

    if N < 3:
        raise ValueError(f"needs N >= 3, got {N}")
    g, _ = adversarial_tree(N)
    colors = [0] * g.n
    colors[0] = 1
    for i in range(2, N):
        colors[i] = i
    for i in range(2, N):
        colors[N + (i - 2)] = N + i - 1  # b-layer: N+1 .. 2N-2
    leaf = 2 * N - 2
    for i in range(2, N):
        block = [c for c in range(1, N + 1) if c != colors[i]]
        for c in block:
            colors[leaf] = c
            leaf += 1
    for c in range(1, 2 * N - 1):  # place a_1
        colors[1] = c
        if is_harmonious(g, Coloring(tuple(colors))):
            return Coloring(tuple(colors))
    raise AssertionError("no color for a_1 in 1..2N-2; construction broken")


def min_vertex_cover(g: Graph, mode: str = "exact") -> VertexCoverResult:
    """Minimum vertex cover (branch on an uncovered edge) or the
    maximal-matching 2-approximation."""
    if mode == "approx":
        matched: set[int] = set()
        cover: set[int] = set()
        for u, v in g.edge_list():
            if u not in matched and v not in matched:
                matched |= {u, v}
                cover |= {u, v}
        return VertexCoverResult(frozenset(cover), "matching_2approx")
    if mode != "exact":
        raise ValueError(f"mode must be 'exact' or 'approx', got {mode!r}")
    if g.n > EXACT_SEARCH_MAX_N:
        raise ValueError(f"exact vertex cover guarded to n <= {EXACT_SEARCH_MAX_N}")

    best: set[int] = set(range(g.n))

    def branch(edges: list[tuple[int, int]], chosen: set[int]) -> None:
        nonlocal best
        edges = [e for e in edges if e[0] not in chosen and e[1] not in chosen]
        if not edges:
            if len(chosen) < len(best):
                best = set(chosen)
            return
        if len(chosen) + 1 >= len(best):
            return
        u, v = edges[-1]
        branch(edges, chosen | {u})
        branch(edges, chosen | {v})

    branch(g.edge_list(), set())
    return VertexCoverResult(frozenset(best), "exact")


def max_independent_set(g: Graph) -> set[int]:
    """Maximum independent set by complementing an exact minimum cover."""
    if g.n > EXACT_SEARCH_MAX_N:
        raise ValueError(f"exact independent set guarded to n <= {EXACT_SEARCH_MAX_N}")
    cover = min_vertex_cover(g, "exact").cover
    return set(range(g.n)) - cover


def is_vertex_cover(g: Graph, cover: set[int] | frozenset[int]) -> bool:
    return all(u in cover or v in cover for u, v in g.edges)


def vc_coloring(g: Graph, cover: VertexCoverResult) -> Coloring:
    """Color via a vertex cover: cover vertices get distinct colors
    1..VC, the rest take the smallest harmonious color above VC.

    The counting argument behind the VC + max_degree^2 - max_degree + 1
    budget guarantees the scan below VC + D^2 - D + 1 never fails.
    """
    if not is_vertex_cover(g, cover.cover):
        raise ValueError("given set is not a vertex cover of the graph")
    vc = cover.size
    delta = stats(g).max_degree
    budget_top = vc + delta * delta - delta + 1
    colors = [0] * g.n
    for i, v in enumerate(sorted(cover.cover), start=1):
        colors[v] = i
    used_pairs: set[tuple[int, int]] = set()
    for u, v in g.edge_list():
        if colors[u] and colors[v]:
            used_pairs.add(_pair(colors[u], colors[v]))
    for v in range(g.n):
        if colors[v]:
            continue
        nbr_colors = [colors[u] for u in g.adj[v] if colors[u] > 0]
        placed = False
        for c in range(vc + 1, budget_top + 1):
            new_pairs = {_pair(c, cu) for cu in nbr_colors}
            if len(new_pairs) == len(nbr_colors) and not (new_pairs & used_pairs):
                colors[v] = c
                used_pairs |= new_pairs
                placed = True
                break
        if not placed:
            raise AssertionError(
                f"no color for vertex {v} within VC + D^2 - D + 1 = {budget_top}"
            )
    return Coloring(tuple(colors))
