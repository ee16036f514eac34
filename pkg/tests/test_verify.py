import math
import random

import pytest

from harmonium import (
    Coloring,
    edge_pair_table,
    from_edge_list,
    is_harmonious,
    lower_bounds,
    named,
    oracle_h,
    solve,
)
from harmonium.families import complete, cycle, path, star


def test_all_distinct_is_harmonious(rng):
    from conftest import random_graph

    for _ in range(20):
        g = random_graph(rng.randint(1, 10), rng.uniform(0.1, 0.8), rng)
        c = Coloring(tuple(range(1, g.n + 1)))
        assert is_harmonious(g, c).ok


def test_pair_repeated_on_path():
    g = path(4)
    v = is_harmonious(g, Coloring((1, 2, 1, 2)))
    assert v.kind == "pair_repeated"
    assert v.pair == (1, 2)
    # the middle edge already repeats the first edge's pair
    assert v.edge == (0, 1) and v.other_edge == (1, 2)


def test_pair_repeated_on_c4():
    g = cycle(4)
    v = is_harmonious(g, Coloring((1, 2, 1, 3)))
    assert v.kind == "pair_repeated" and v.pair == (1, 2)


def test_not_proper_reported_first():
    g = path(3)
    v = is_harmonious(g, Coloring((1, 1, 2)))
    assert v.kind == "not_proper" and v.edge == (0, 1)


def test_partial_coloring_rejected():
    with pytest.raises(ValueError):
        is_harmonious(path(3), Coloring((1, 2)))
    with pytest.raises(ValueError):
        Coloring((0, 1, 2))


def test_pair_table_k3():
    table = edge_pair_table(complete(3), Coloring((1, 2, 3)))
    assert len(table) == 3
    assert all(len(v) == 1 for v in table.values())


def test_pair_table_star():
    g = star(3)
    table = edge_pair_table(g, Coloring((1, 2, 2, 3)))
    assert len(table[(1, 2)]) == 2


def test_pair_table_from_solver_witness():
    g = cycle(5)
    res = solve(g)
    assert res.h == 5  # C_5 has diameter 2, so every vertex needs its own color
    table = edge_pair_table(g, res.witness)
    assert res.witness.k == 5
    assert len(table) == 5
    assert all(len(v) == 1 for v in table.values())


def test_verdict_equivalent_to_table(rng):
    from conftest import random_graph

    for _ in range(100):
        g = random_graph(rng.randint(2, 9), rng.uniform(0.2, 0.7), rng)
        k = rng.randint(1, g.n)
        c = Coloring(tuple(rng.randint(1, k) for _ in range(g.n)))
        table = edge_pair_table(g, c)
        table_ok = all(len(v) == 1 for v in table.values()) and not any(
            a == b for a, b in table
        )
        assert is_harmonious(g, c).ok == table_ok


def test_bounds_k4():
    b = lower_bounds(complete(4))
    assert (b.size_bound, b.delta_bound, b.n2_bound, b.combined) == (4, 4, 4, 4)


def test_bounds_petersen():
    b = lower_bounds(named("petersen"))
    assert b.n2_bound == 10 and b.combined == 10


def test_bounds_truncated_tetrahedron():
    b = lower_bounds(named("truncated_tetrahedron"))
    # ceil((1 + sqrt(8*18+1)) / 2) = ceil(6.52) = 7, evaluated by hand
    assert b.size_bound == 7
    assert b.regular33_bound == 7
    assert b.combined == 7


def test_size_bound_is_min_k_with_enough_pairs():
    for m in range(1, 120):
        b = lower_bounds(star(m))
        # smallest k with C(k,2) >= m, by scan
        kk = 1
        while kk * (kk - 1) // 2 < m:
            kk += 1
        assert b.size_bound == kk == math.ceil((1 + math.sqrt(8 * m + 1)) / 2)


def test_p5_shows_n2_not_a_general_bound():
    # colors 1,2,3,1,4 beat max |N2[v]| = 5: the n2 bound must not
    # enter combined for diameter-3 graphs
    g = path(5)
    assert is_harmonious(g, Coloring((1, 2, 3, 1, 4))).ok
    b = lower_bounds(g)
    assert b.n2_bound == 5
    assert b.combined <= 4


def test_binomial_edge_bound_on_harmonious_colorings(rng):
    from conftest import random_graph

    for _ in range(30):
        g = random_graph(rng.randint(2, 8), rng.uniform(0.2, 0.6), rng)
        res = solve(g)
        k = res.h
        assert k * (k - 1) // 2 >= g.m


def test_exact_h_at_least_combined(rng):
    from conftest import random_graph

    for _ in range(30):
        g = random_graph(rng.randint(1, 8), rng.uniform(0.1, 0.7), rng)
        assert solve(g).h >= lower_bounds(g).combined


def test_diameter2_exact_h_is_n(rng):
    from conftest import random_graph
    from harmonium import stats

    found = 0
    for _ in range(80):
        g = random_graph(rng.randint(2, 9), rng.uniform(0.4, 0.9), rng)
        if 0 <= stats(g).diameter <= 2:
            assert solve(g).h == g.n
            found += 1
    assert found > 10
