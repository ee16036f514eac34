"""Deterministic generators for parametric graph families.

Labeling conventions (fixed so closed-form colorings can be index
formulas): cycle vertices are 0..n-1 in cyclic order; hub-style vertices
(wheel, sunflower, star, ...) are id 0; the sun/closed-sun clique is ids
0..n-1 with outer vertex u_i at id n+i-1 (i 1-based); the lollipop
clique is ids 0..n-1 with the path hanging off vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, from_edge_list

FAMILIES = (
    "path", "cycle", "complete", "star", "wheel", "gear", "helm", "flower",
    "double_wheel", "g_nn", "triangular_book", "book_with_bookmark", "jewel",
    "sunflower", "sun", "closed_sun", "lollipop", "generalized_petersen",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    m: int | None = None  # second parameter (lollipop m, petersen skip k)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n}: hub 0 plus n leaves."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def _rim(n: int) -> list[tuple[int, int]]:
    return [(1 + i, 1 + (i + 1) % n) for i in range(n)]


def wheel(n: int) -> Graph:
    """Hub 0 joined to cycle 1..n."""
    _require(n >= 3, f"wheel needs n >= 3, got {n}")
    return from_edge_list(n + 1, _rim(n) + [(0, i) for i in range(1, n + 1)])


def gear(n: int) -> Graph:
    """Wheel with every rim edge subdivided; subdivider of (v_i, v_{i+1}) is n+i."""
    _require(n >= 3, f"gear needs n >= 3, got {n}")
    edges = [(0, i) for i in range(1, n + 1)]
    for i in range(n):
        mid = n + 1 + i
        edges += [(1 + i, mid), (mid, 1 + (i + 1) % n)]
    return from_edge_list(2 * n + 1, edges)


def helm(n: int) -> Graph:
    """Wheel plus a pendant n+i attached to rim vertex i."""
    _require(n >= 3, f"helm needs n >= 3, got {n}")
    edges = _rim(n) + [(0, i) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return from_edge_list(2 * n + 1, edges)


def flower(n: int) -> Graph:
    """Helm with every pendant also joined to the hub."""
    g = helm(n)
    extra = [(0, n + i) for i in range(1, n + 1)]
    return from_edge_list(g.n, list(g.edges) + extra)


def double_wheel(n: int) -> Graph:
    """Two n-cycles (ids 1..n and n+1..2n) sharing hub 0."""
    _require(n >= 3, f"double_wheel needs n >= 3, got {n}")
    edges = _rim(n) + [(n + 1 + i, n + 1 + (i + 1) % n) for i in range(n)]
    edges += [(0, i) for i in range(1, 2 * n + 1)]
    return from_edge_list(2 * n + 1, edges)


def g_nn(n: int) -> Graph:
    """Double wheel with the matching v_i -- u_i added."""
    g = double_wheel(n)
    extra = [(i, n + i) for i in range(1, n + 1)]
    return from_edge_list(g.n, list(g.edges) + extra)


def triangular_book(n: int) -> Graph:
    """B_{3,n}: spine u=0, v=1; page vertices 2..n+1."""
    _require(n >= 1, f"triangular_book needs n >= 1, got {n}")
    edges = [(0, 1)] + [(0, 2 + i) for i in range(n)] + [(1, 2 + i) for i in range(n)]
    return from_edge_list(n + 2, edges)


def book_with_bookmark(n: int) -> Graph:
    """TB_{3,n}: triangular book plus bookmark x=2 pendant on u."""
    _require(n >= 1, f"book_with_bookmark needs n >= 1, got {n}")
    edges = [(0, 1), (0, 2)]
    edges += [(0, 3 + i) for i in range(n)] + [(1, 3 + i) for i in range(n)]
    return from_edge_list(n + 3, edges)


def jewel(n: int) -> Graph:
    """J_n: u=0, v=1, x=2, y=3 and n rim vertices joined to u and v."""
    _require(n >= 1, f"jewel needs n >= 1, got {n}")
    edges = [(0, 2), (2, 1), (2, 3), (0, 3), (3, 1)]
    edges += [(0, 4 + i) for i in range(n)] + [(1, 4 + i) for i in range(n)]
    return from_edge_list(n + 4, edges)


def sunflower(n: int) -> Graph:
    """Wheel 0..n plus petal u_i = n+i joined to rim vertices i and i+1."""
    _require(n >= 3, f"sunflower needs n >= 3, got {n}")
    g = wheel(n)
    extra = []
    for i in range(1, n + 1):
        extra += [(n + i, i), (n + i, 1 + i % n)]
    return from_edge_list(2 * n + 1, list(g.edges) + extra)


def sun(n: int) -> Graph:
    """K_n (ids 0..n-1) with u_i = n+i-1 joined to clique vertices i-1, i mod n."""
    _require(n >= 3, f"sun needs n >= 3, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for i in range(n):
        edges += [(n + i, i), (n + i, (i + 1) % n)]
    return from_edge_list(2 * n, edges)


def closed_sun(n: int) -> Graph:
    """Sun with the outer vertices joined into a cycle."""
    g = sun(n)
    extra = [(n + i, n + (i + 1) % n) for i in range(n)]
    return from_edge_list(g.n, list(g.edges) + extra)


def lollipop(n: int, m: int) -> Graph:
    """L_{n,m}: K_n on 0..n-1 with an m-vertex path starting at clique vertex 0.

    Path vertices are 0, n, n+1, ..., n+m-2 (the first path vertex is
    identified with clique vertex 0), n + m - 1 vertices in total.
    """
    _require(n >= 3, f"lollipop needs n >= 3, got {n}")
    _require(m >= 2, f"lollipop needs m >= 2, got {m}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    prev = 0
    for j in range(n, n + m - 1):
        edges.append((prev, j))
        prev = j
    return from_edge_list(n + m - 1, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n,k): outer cycle 0..n-1, inner vertices n..2n-1 with skip k."""
    _require(n >= 3, f"generalized_petersen needs n >= 3, got {n}")
    _require(1 <= k < n / 2, f"generalized_petersen needs 1 <= k < n/2, got k={k}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return from_edge_list(2 * n, edges)


_TWO_PARAM = {"lollipop", "generalized_petersen"}

_DISPATCH = {
    "path": path, "cycle": cycle, "complete": complete, "star": star,
    "wheel": wheel, "gear": gear, "helm": helm, "flower": flower,
    "double_wheel": double_wheel, "g_nn": g_nn,
    "triangular_book": triangular_book, "book_with_bookmark": book_with_bookmark,
    "jewel": jewel, "sunflower": sunflower, "sun": sun, "closed_sun": closed_sun,
    "lollipop": lollipop, "generalized_petersen": generalized_petersen,
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec."""
    if spec.family not in _DISPATCH:
        raise ValueError(f"unknown family {spec.family!r}; known: {', '.join(FAMILIES)}")
    fn = _DISPATCH[spec.family]
    if spec.family in _TWO_PARAM:
        if spec.m is None:
            raise ValueError(f"family {spec.family!r} needs a second parameter")
        return fn(spec.n, spec.m)
    if spec.m is not None:
        raise ValueError(f"family {spec.family!r} takes a single parameter")
    return fn(spec.n)


def adversarial_tree(N: int) -> tuple[Graph, list[int]]:
    """Tree on N(N-1) vertices that defeats the greedy colorer.

    Root 0 has children 1..N-1; each of 2..N-1 carries a middle vertex
    which in turn has N-1 leaves. Returns the tree together with the
    vertex order (root, a-layer, b-layer, leaves) that forces greedy to
    spend (N-1)^2 + 1 colors.
    """
    if N < 3:
        raise ValueError(f"adversarial tree needs N >= 3, got {N}")
    edges = [(0, i) for i in range(1, N)]
    b_of = {}
    for i in range(2, N):
        b = N + (i - 2)
        b_of[i] = b
        edges.append((i, b))
    nxt = 2 * N - 2
    for i in range(2, N):
        for _ in range(N - 1):
            edges.append((b_of[i], nxt))
            nxt += 1
    g = from_edge_list(N * (N - 1), edges)
    return g, list(range(g.n))
