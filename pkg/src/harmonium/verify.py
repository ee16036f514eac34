"""Harmonious-coloring verifier and lower/upper bound calculators.

The verifier is the ground truth everything else is checked against: a
coloring is harmonious iff it is proper and the induced map
edge -> {color(u), color(v)} is injective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, bfs_distances, closed_n2, stats


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 1..k to vertices 0..n-1."""

    colors: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        """Number of distinct colors used."""
        return len(set(self.colors))

    def __post_init__(self):
        if any(c < 1 for c in self.colors):
            raise ValueError("colors must be positive integers")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a harmonious check.

    kind is "ok", "not_proper" (edge carries the offending edge) or
    "pair_repeated" (pair plus the first two edges sharing it). The
    first violation in ascending edge order is reported.
    """

    kind: str
    edge: tuple[int, int] | None = None
    pair: tuple[int, int] | None = None
    other_edge: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.kind == "ok"

    def __bool__(self) -> bool:
        return self.ok


def _check_total(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")


def is_harmonious(g: Graph, c: Coloring) -> Verdict:
    """Verify properness and edge-pair injectivity in one pass."""
    _check_total(g, c)
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v in g.edge_list():
        a, b = c.colors[u], c.colors[v]
        if a == b:
            return Verdict("not_proper", edge=(u, v))
        pair = (min(a, b), max(a, b))
        if pair in seen:
            return Verdict("pair_repeated", pair=pair, edge=seen[pair], other_edge=(u, v))
        seen[pair] = (u, v)
    return Verdict("ok")


def edge_pair_table(g: Graph, c: Coloring) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Map each unordered color pair to the edges carrying it.

    Monochromatic edges appear under the pair (c, c); the coloring is
    harmonious iff no such pair occurs and every multiplicity is 1.
    """
    _check_total(g, c)
    table: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.edge_list():
        a, b = c.colors[u], c.colors[v]
        table.setdefault((min(a, b), max(a, b)), []).append((u, v))
    return table


@dataclass(frozen=True)
class BoundsReport:
    """Lower bounds on the harmonious chromatic number, plus context.

    size_bound, delta_bound and (for diameter-2 graphs) n2_bound are
    valid lower bounds; combined is their maximum over the applicable
    ones. n2_bound is reported for every graph but only enters combined
    when the diameter is at most 2: two same-colored vertices force a
    repeated pair only when they are within distance 2 of each other,
    which membership in a common N2[v] does not imply in general
    (colors 1,2,3,1,4 on the 5-path beat max |N2[v]| = 5).
    regular33_bound is 7 for 3-regular diameter-3 graphs. The two
    classical upper-bound formulas are evaluated for context only.
    """

    size_bound: int
    delta_bound: int
    n2_bound: int
    regular33_bound: int | None
    combined: int
    upper_trivial: int  # n: all-distinct coloring
    upper_lee_mitchem: int
    upper_mcdiarmid: int


def lower_bounds(g: Graph) -> BoundsReport:
    """Evaluate every known lower bound and combine the applicable ones."""
    st = stats(g)
    size_bound = math.ceil((1 + math.isqrt(8 * st.m + 1)) / 2)
    if (size_bound * (size_bound - 1)) // 2 < st.m:  # isqrt truncation
        size_bound += 1
    delta_bound = st.max_degree + 1
    n2_bound = max((len(closed_n2(g, v)) for v in range(g.n)), default=0)
    regular33 = None
    if g.n > 0 and st.diameter == 3 and all(d == 3 for d in st.degree_sequence):
        regular33 = 7
    candidates = [size_bound, delta_bound]
    if 0 <= st.diameter <= 2:
        candidates.append(n2_bound)
    if regular33 is not None:
        candidates.append(regular33)
    delta = st.max_degree
    return BoundsReport(
        size_bound=size_bound,
        delta_bound=delta_bound,
        n2_bound=n2_bound,
        regular33_bound=regular33,
        combined=max(candidates, default=1),
        upper_trivial=g.n,
        upper_lee_mitchem=(delta * delta + 1) * math.ceil(math.sqrt(g.n)) if g.n else 0,
        upper_mcdiarmid=math.ceil(2 * delta * math.sqrt(g.n - 1)) if g.n > 1 else g.n,
    )
