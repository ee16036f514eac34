"""Closed-form colorings and exact formulas for the cycle-related
families: sunflower, sun, closed sun and lollipop.

The lollipop value reduces to a trail-existence question: an
r-harmonious coloring of L_{n,m} is exactly a trail with m vertices in
K_r minus the edges among colors 1..n, starting at color 1. The four
parity cases decide which edges must be deleted so the residual graph
carries an Eulerian (closed or open) trail, and the plan realizes one
with Hierholzer's algorithm truncated to m vertices.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from . import families
from .graph import Graph
from .solver import SolverConfig, solve
from .verify import Coloring

_H_CYCLE_MAX = 16
_h_cycle_cache: dict[int, int] = {}
_h_cycle_lock = threading.Lock()


def h_cycle(n: int) -> int:
    """Exact h(C_n) for 3 <= n <= 16, solver-backed and memoized."""
    if not 3 <= n <= _H_CYCLE_MAX:
        raise ValueError(f"h_cycle supports 3 <= n <= {_H_CYCLE_MAX}, got {n}")
    with _h_cycle_lock:
        if n not in _h_cycle_cache:
            _h_cycle_cache[n] = solve(families.cycle(n)).h
        return _h_cycle_cache[n]


def cycle_coloring(n: int) -> Coloring:
    """An optimal harmonious coloring of C_n (solver witness)."""
    res = solve(families.cycle(n), SolverConfig(start_k=h_cycle(n)))
    return res.witness


def color_sunflower(n: int) -> Coloring:
    """Harmonious (n+1)-coloring of the sunflower for n >= 7.

    Hub gets 1, rim vertex v_i gets i+1, and the petal layer reuses the
    rim colors shifted by three rim positions, so rim edges, petal-rim
    edges and hub edges occupy disjoint color-difference classes.
    Smaller n belong to the exact solver.
    """
    if n < 7:
        raise ValueError(f"closed-form sunflower coloring needs n >= 7, got {n}")
    colors = [0] * (2 * n + 1)
    colors[0] = 1
    for i in range(1, n + 1):
        colors[i] = i + 1
    for i in range(1, n + 1):  # petal u_i (id n+i) takes rim color of v_{i+3}
        colors[n + i] = (i + 2) % n + 2
    return Coloring(tuple(colors))


def color_sun(n: int) -> Coloring:
    """Harmonious coloring of the sun graph: n+2 colors (n even) or
    n+3 (n odd, the last outer vertex taking the extra color)."""
    if n < 3:
        raise ValueError(f"sun needs n >= 3, got {n}")
    colors = [0] * (2 * n)
    for i in range(1, n + 1):  # clique vertex v_i is id i-1
        colors[i - 1] = i
    for j in range(1, n + 1):  # outer u_j is id n+j-1
        colors[n + j - 1] = n + 1 if j % 2 == 1 else n + 2
    if n % 2 == 1:
        colors[2 * n - 1] = n + 3
    return Coloring(tuple(colors))


def color_closed_sun(n: int) -> Coloring:
    """Closed sun: all-distinct for n <= 5 (diameter 2), otherwise
    clique colors 1..n plus an optimal cycle coloring shifted by n."""
    if n < 3:
        raise ValueError(f"closed sun needs n >= 3, got {n}")
    if n <= 5:
        return Coloring(tuple(range(1, 2 * n + 1)))
    cyc = cycle_coloring(n)
    colors = list(range(1, n + 1)) + [n + c for c in cyc.colors]
    return Coloring(tuple(colors))


def _min_t(n: int, m: int) -> int:
    t = 0
    while m > 1 + n * t + t * (t - 1) // 2:
        t += 1
    return t


def _case_and_capacity(n: int, m: int, t: int) -> tuple[str, int]:
    """Parity case name and the largest m admitting h = n + t."""
    k = n * t + t * (t - 1) // 2
    if t % 2 == 0 and n % 2 == 1:
        return "even_odd", m  # always attainable
    if t % 2 == 0 and n % 2 == 0:
        return "even_even", 1 + k - t // 2
    if t % 2 == 1 and n % 2 == 0:
        return "odd_even", 1 + k - (n - 2)
    if t >= n - 2:
        return "odd_odd_big_t", 1 + k - (n - 2 + max((t - (n - 2)) // 2, 0))
    return "odd_odd_small_t", 1 + k - (n - 2)


def lollipop_h(n: int, m: int) -> int:
    """Exact h(L_{n,m}) by the four-parity-case formula."""
    if n < 3 or m < 2:
        raise ValueError(f"lollipop needs n >= 3, m >= 2, got ({n}, {m})")
    t = _min_t(n, m)
    _, capacity = _case_and_capacity(n, m, t)
    return n + t if m <= capacity else n + t + 1


@dataclass(frozen=True)
class LollipopPlan:
    n: int
    m: int
    t: int
    k: int
    case: str
    extra_color: bool  # h = n + t + 1
    r: int  # total colors, n + t (+1)
    removed_edges: frozenset[tuple[int, int]]  # deleted from K_r - E(<[n]>)
    trail: tuple[int, ...]  # m vertices of K_r, starts at 1


def _residual_removals(n: int, t: int, case: str, extra: bool) -> set[tuple[int, int]]:
    """Edges deleted from K_r - E(<[n]>) so an Eulerian trail from
    vertex 1 exists (vertex labels 1-based as in the clique K_r)."""
    def pair(a, b):
        return (min(a, b), max(a, b))

    removed: set[tuple[int, int]] = set()
    if not extra:
        if case == "even_odd":
            pass  # already Eulerian
        elif case == "even_even":
            removed = {pair(n + j, n + j + 1) for j in range(1, t, 2)}
        elif case == "odd_even":
            removed = {pair(i, n + 1) for i in range(3, n + 1)}
        elif case == "odd_odd_big_t":
            removed = {pair(i, n + i - 2) for i in range(3, n + 1)}
            removed |= {pair(n + j, n + j + 1) for j in range(n - 1, t, 2)}
        elif case == "odd_odd_small_t":
            removed = {pair(i, n + i - 2) for i in range(3, t + 2)}
            removed |= {pair(i, n + t) for i in range(t + 2, n + 1)}
    else:
        if case == "even_even":
            removed = {pair(i, n + t + 1) for i in range(1, n + 1)}
        elif case == "odd_even":
            removed = {pair(n + j, n + j + 1) for j in range(1, t + 1, 2)}
        # odd_odd cases: K_{n+t+1} - E(<[n]>) is already Eulerian
    return removed


def _eulerian_trail(r: int, n: int, removed: set[tuple[int, int]], start: int) -> list[int]:
    """Hierholzer's algorithm on K_r minus clique-internal and removed
    edges; returns the full trail beginning at `start`."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, r + 1)}
    m_edges = 0
    for u in range(1, r + 1):
        for v in range(u + 1, r + 1):
            if u <= n and v <= n:
                continue
            if (u, v) in removed:
                continue
            adj[u].add(v)
            adj[v].add(u)
            m_edges += 1
    stack = [start]
    out: list[int] = []
    while stack:
        v = stack[-1]
        if adj[v]:
            w = min(adj[v])  # deterministic edge choice
            adj[v].remove(w)
            adj[w].remove(v)
            stack.append(w)
        else:
            out.append(stack.pop())
    trail = out[::-1]
    if len(trail) != m_edges + 1 or trail[0] != start:
        raise AssertionError("residual graph is not Eulerian-traversable from start")
    return trail


def lollipop_plan(n: int, m: int) -> LollipopPlan:
    """Build the residual graph for (n, m), walk it, and record the plan."""
    if n < 3 or m < 2:
        raise ValueError(f"lollipop needs n >= 3, m >= 2, got ({n}, {m})")
    t = _min_t(n, m)
    k = n * t + t * (t - 1) // 2
    case, capacity = _case_and_capacity(n, m, t)
    extra = m > capacity
    r = n + t + 1 if extra else n + t
    removed = _residual_removals(n, t, case, extra)
    trail = _eulerian_trail(r, n, removed, start=1)
    if len(trail) < m:
        raise AssertionError(f"residual trail too short: {len(trail)} < {m}")
    trail = trail[:m]
    return LollipopPlan(
        n=n, m=m, t=t, k=k, case=case, extra_color=extra, r=r,
        removed_edges=frozenset(removed), trail=tuple(trail),
    )


def lollipop_coloring(plan: LollipopPlan) -> Coloring:
    """Derive the coloring of L_{n,m} from a plan: clique vertex i gets
    color i+1, the j-th path vertex gets trail[j]."""
    n, m = plan.n, plan.m
    colors = [0] * (n + m - 1)
    for i in range(n):
        colors[i] = i + 1
    colors[0] = plan.trail[0]  # junction; trail starts at 1 so this is a no-op
    for j in range(1, m):
        colors[n + j - 1] = plan.trail[j]
    return Coloring(tuple(colors))


def lollipop_graph(plan: LollipopPlan) -> Graph:
    return families.lollipop(plan.n, plan.m)
