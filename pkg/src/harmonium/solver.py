"""Exact harmonious chromatic number by pruned backtracking.

exists_k colors vertices one by one, maintaining an incremental
color-pair usage table. Three prunes keep the search small:
  - properness + pair uniqueness against already-colored neighbors,
  - symmetry breaking: a brand-new color must be (max color so far) + 1,
  - counting: the edges still uncolored must fit in the free pairs.
An "infeasible" answer is an exhaustive claim; running out of budget is
reported as its own outcome, never conflated with infeasibility.

oracle_h is the deliberately dumb counterpart: plain enumeration of all
assignments with early pair-conflict exit and no symmetry breaking,
guarded to small graphs. It exists so the solver has something
independent to agree with.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import Graph
from .verify import Coloring, is_harmonious, lower_bounds

INFEASIBLE = "infeasible"
BUDGET_EXHAUSTED = "budget_exhausted"

ORACLE_MAX_N = 9


class BudgetExceeded(Exception):
    pass


@dataclass
class SolverConfig:
    node_budget: int | None = None
    time_budget: float | None = None  # seconds
    start_k: int | None = None  # defaults to the combined lower bound
    parallel_roots: bool = False
    degree_order: bool = False  # color vertices in descending-degree order

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a single exists_k run."""

    status: str  # "witness" | INFEASIBLE | BUDGET_EXHAUSTED
    witness: Coloring | None
    nodes_explored: int

    @property
    def feasible(self) -> bool:
        return self.status == "witness"


@dataclass(frozen=True)
class SolveResult:
    h: int
    witness: Coloring
    nodes_explored: int
    elapsed: float
    proved_lower: int  # largest k shown infeasible (start_k - 1 if first k succeeded)


class _Search:
    """Sequential backtracking over one vertex order, reusable across prefixes."""

    def __init__(self, g: Graph, k: int, order: list[int],
                 node_budget: int | None, deadline: float | None):
        self.k = k
        self.order = order
        pos = [0] * g.n
        for idx, v in enumerate(order):
            pos[v] = idx
        # neighbors of order[i] that appear earlier in the order
        self.back = [
            [pos[u] for u in g.adj[v] if pos[u] < idx]
            for idx, v in enumerate(order)
        ]
        self.m = g.m
        self.color = [0] * g.n  # indexed by order position
        self.pair_used = [[False] * (k + 1) for _ in range(k + 1)]
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline

    def run(self, prefix: list[int] | None = None) -> list[int] | None:
        """Search for a full assignment; prefix pins the first positions."""
        start = 0
        maxc = 0
        rem = self.m
        free = self.k * (self.k - 1) // 2
        if prefix:
            for idx, c in enumerate(prefix):
                marked = self._try(idx, c)
                if marked is None:
                    raise ValueError("infeasible prefix")
                rem -= len(marked)
                free -= len(marked)
                self.color[idx] = c
                maxc = max(maxc, c)
            start = len(prefix)
        if self._rec(start, maxc, rem, free):
            return list(self.color)
        return None

    def _try(self, idx: int, c: int) -> list[int] | None:
        """Mark pairs for coloring position idx with c; None on conflict."""
        pair_used = self.pair_used
        marked = []
        for j in self.back[idx]:
            cu = self.color[j]
            if cu == c or pair_used[c][cu]:
                for cu2 in marked:
                    pair_used[c][cu2] = pair_used[cu2][c] = False
                return None
            pair_used[c][cu] = pair_used[cu][c] = True
            marked.append(cu)
        return marked

    def _rec(self, idx: int, maxc: int, rem: int, free: int) -> bool:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExceeded
        if self.deadline is not None and self.nodes % 4096 == 0 \
                and time.monotonic() > self.deadline:
            raise BudgetExceeded
        if idx == len(self.order):
            return True
        pair_used = self.pair_used
        color = self.color
        for c in range(1, min(maxc + 1, self.k) + 1):
            marked = self._try(idx, c)
            if marked is None:
                continue
            used = len(marked)
            if rem - used <= free - used:
                color[idx] = c
                if self._rec(idx + 1, max(maxc, c), rem - used, free - used):
                    return True
                color[idx] = 0
            for cu in marked:
                pair_used[c][cu] = pair_used[cu][c] = False
        return False


def _vertex_order(g: Graph, cfg: SolverConfig) -> list[int]:
    if cfg.degree_order:
        return sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    return list(range(g.n))


def _unpermute(g: Graph, order: list[int], colors_by_pos: list[int]) -> Coloring:
    out = [0] * g.n
    for idx, v in enumerate(order):
        out[v] = colors_by_pos[idx]
    return Coloring(tuple(out))


def _root_branches(k: int, depth: int) -> list[list[int]]:
    """Symmetry-broken color prefixes of the given length."""
    prefixes: list[list[int]] = [[]]
    for _ in range(depth):
        nxt = []
        for p in prefixes:
            maxc = max(p, default=0)
            for c in range(1, min(maxc + 1, k) + 1):
                nxt.append(p + [c])
        prefixes = nxt
    return prefixes


def _worker(args) -> tuple[str, list[int] | None, int]:
    g, k, order, prefix, node_budget, time_budget = args
    deadline = time.monotonic() + time_budget if time_budget else None
    search = _Search(g, k, order, node_budget, deadline)
    try:
        sol = search.run(prefix)
    except ValueError:  # infeasible prefix: nothing under this root
        return (INFEASIBLE, None, 0)
    except BudgetExceeded:
        return (BUDGET_EXHAUSTED, None, search.nodes)
    if sol is None:
        return (INFEASIBLE, None, search.nodes)
    return ("witness", sol, search.nodes)


def _thread_cap() -> int:
    cap = os.environ.get("HARMONIUM_THREADS")
    if cap:
        return max(1, int(cap))
    return os.cpu_count() or 1


def exists_k(g: Graph, k: int, cfg: SolverConfig | None = None) -> SearchOutcome:
    """Decide whether g has a harmonious k-coloring.

    Returns a witness, an exhaustive INFEASIBLE, or BUDGET_EXHAUSTED.
    """
    if k < 1:
        raise ValueError(f"color budget must be >= 1, got {k}")
    cfg = cfg or SolverConfig()
    order = _vertex_order(g, cfg)
    if g.n == 0:
        return SearchOutcome("witness", Coloring(()), 0)

    if cfg.parallel_roots and g.n >= 2:
        depth = min(2, g.n)
        branches = _root_branches(k, depth)
        workers = min(_thread_cap(), len(branches))
        if workers > 1:
            args = [(g, k, order, p, cfg.node_budget, cfg.time_budget) for p in branches]
            total_nodes = 0
            exhausted = False
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for status, sol, nodes in pool.map(_worker, args):
                    total_nodes += nodes
                    if status == "witness":
                        pool.shutdown(wait=False, cancel_futures=True)
                        return SearchOutcome("witness", _unpermute(g, order, sol), total_nodes)
                    if status == BUDGET_EXHAUSTED:
                        exhausted = True
            if exhausted:
                return SearchOutcome(BUDGET_EXHAUSTED, None, total_nodes)
            return SearchOutcome(INFEASIBLE, None, total_nodes)

    deadline = time.monotonic() + cfg.time_budget if cfg.time_budget else None
    search = _Search(g, k, order, cfg.node_budget, deadline)
    try:
        sol = search.run()
    except BudgetExceeded:
        return SearchOutcome(BUDGET_EXHAUSTED, None, search.nodes)
    if sol is None:
        return SearchOutcome(INFEASIBLE, None, search.nodes)
    return SearchOutcome("witness", _unpermute(g, order, sol), search.nodes)


def solve(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Exact harmonious chromatic number with witness and statistics.

    Iterates exists_k upward from the combined lower bound (or
    cfg.start_k). Budget exhaustion raises BudgetExceeded carrying the
    bracketing information in its message.
    """
    cfg = cfg or SolverConfig()
    t0 = time.monotonic()
    start = cfg.start_k if cfg.start_k is not None else max(1, lower_bounds(g).combined)
    total_nodes = 0
    k = start
    while True:
        out = exists_k(g, k, cfg)
        total_nodes += out.nodes_explored
        if out.status == BUDGET_EXHAUSTED:
            raise BudgetExceeded(
                f"budget exhausted at k={k}; proved_lower={k - 1}, upper={g.n}"
            )
        if out.feasible:
            witness = out.witness
            assert is_harmonious(g, witness), "solver produced invalid witness"
            return SolveResult(
                h=k,
                witness=witness,
                nodes_explored=total_nodes,
                elapsed=time.monotonic() - t0,
                proved_lower=k - 1,
            )
        k += 1
        if k > max(g.n, 1):
            raise AssertionError("all-distinct coloring must be feasible")


def oracle_h(g: Graph) -> int:
    """Brute-force harmonious chromatic number for n <= 9.

    Enumerates assignments V -> [k] for k = 1..n in colexicographic
    order, abandoning a partial assignment as soon as it repeats a color
    pair or breaks properness. Independent of the pruned solver.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle guarded to n <= {ORACLE_MAX_N}, got {g.n}")
    if g.n == 0:
        return 0
    back = [[u for u in g.adj[v] if u < v] for v in range(g.n)]
    n = g.n

    def feasible(k: int) -> bool:
        assign = [0] * n
        used: set[tuple[int, int]] = set()
        stack: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        v = 0
        while True:
            c = assign[v] + 1
            for p in stack[v]:
                used.discard(p)
            stack[v].clear()
            if c > k:
                assign[v] = 0
                v -= 1
                if v < 0:
                    return False
                continue
            assign[v] = c
            ok = True
            for u in back[v]:
                cu = assign[u]
                if cu == c:
                    ok = False
                    break
                p = (min(c, cu), max(c, cu))
                if p in used:
                    ok = False
                    break
                used.add(p)
                stack[v].append(p)
            if not ok:
                for p in stack[v]:
                    used.discard(p)
                stack[v].clear()
                continue
            if v == n - 1:
                return True
            v += 1

    for k in range(1, n + 1):
        if feasible(k):
            return k
    raise AssertionError("unreachable: k = n always feasible")
