import pytest

from harmonium import (
    adversarial_good_coloring,
    adversarial_tree,
    from_edge_list,
    greedy,
    is_harmonious,
    max_independent_set,
    min_vertex_cover,
    named,
    solve,
    stats,
    vc_coloring,
)
from harmonium.families import complete, cycle, path, star
from harmonium.heuristics import is_vertex_cover


def test_greedy_is_harmonious(rng):
    from conftest import random_graph

    for _ in range(30):
        g = random_graph(rng.randint(1, 14), rng.uniform(0.1, 0.6), rng)
        c = greedy(g, list(range(g.n)))
        assert is_harmonious(g, c).ok


def test_greedy_order_matters_on_adversarial_tree():
    for N in range(3, 7):
        g, order = adversarial_tree(N)
        bad = greedy(g, order)
        assert is_harmonious(g, bad).ok
        assert bad.k == (N - 1) ** 2 + 1


def test_greedy_rejects_non_permutation():
    g = path(3)
    with pytest.raises(ValueError):
        greedy(g, [0, 1])
    with pytest.raises(ValueError):
        greedy(g, [0, 1, 1])


def test_greedy_path_is_optimal_enough():
    # on short paths the natural order wastes at most a couple of colors
    g = path(6)
    c = greedy(g, list(range(6)))
    assert is_harmonious(g, c).ok
    assert c.k <= 6


def test_good_coloring_beats_greedy():
    for N in range(3, 9):
        g, order = adversarial_tree(N)
        good = adversarial_good_coloring(N)
        assert is_harmonious(g, good).ok
        assert good.k <= 2 * N - 2
        assert greedy(g, order).k == (N - 1) ** 2 + 1


def test_good_coloring_rejects_small_n():
    with pytest.raises(ValueError):
        adversarial_good_coloring(2)


def test_min_vertex_cover_examples():
    assert min_vertex_cover(star(5)).size == 1
    assert min_vertex_cover(complete(5)).size == 4
    assert min_vertex_cover(cycle(6)).size == 3
    assert min_vertex_cover(path(4)).size == 2
    assert min_vertex_cover(named("petersen")).size == 6


def test_min_vertex_cover_is_a_cover(rng):
    from conftest import random_graph

    for _ in range(25):
        g = random_graph(rng.randint(1, 12), rng.uniform(0.1, 0.6), rng)
        res = min_vertex_cover(g)
        assert res.method == "exact"
        assert is_vertex_cover(g, res.cover)


def test_approx_cover_within_factor_two(rng):
    from conftest import random_graph

    for _ in range(25):
        g = random_graph(rng.randint(2, 14), rng.uniform(0.15, 0.5), rng)
        exact = min_vertex_cover(g)
        approx = min_vertex_cover(g, "approx")
        assert is_vertex_cover(g, approx.cover)
        assert approx.method == "matching_2approx"
        assert approx.size <= 2 * max(exact.size, 1)


def test_exact_cover_guard():
    with pytest.raises(ValueError):
        min_vertex_cover(cycle(21))
    with pytest.raises(ValueError):
        min_vertex_cover(cycle(5), "bogus")
    # approx has no size guard
    assert is_vertex_cover(cycle(30), min_vertex_cover(cycle(30), "approx").cover)


def test_max_independent_set_examples():
    assert len(max_independent_set(cycle(6))) == 3
    assert len(max_independent_set(complete(4))) == 1
    assert len(max_independent_set(named("petersen"))) == 4


def test_independent_set_really_independent(rng):
    from conftest import random_graph

    for _ in range(20):
        g = random_graph(rng.randint(1, 12), rng.uniform(0.2, 0.6), rng)
        ind = max_independent_set(g)
        assert all(
            (min(u, v), max(u, v)) not in g.edges for u in ind for v in ind if u != v
        )


def test_vc_coloring_budget_example():
    g = cycle(6)
    res = min_vertex_cover(g)
    c = vc_coloring(g, res)
    assert is_harmonious(g, c).ok
    delta = stats(g).max_degree
    assert c.k <= res.size + delta * delta - delta + 1


def test_vc_coloring_rejects_non_cover():
    from harmonium import VertexCoverResult

    g = cycle(5)
    with pytest.raises(ValueError):
        vc_coloring(g, VertexCoverResult(frozenset({0}), "exact"))


def test_vc_coloring_random(rng):
    from conftest import random_graph

    for _ in range(40):
        n = rng.randint(2, 18)
        g = random_graph(n, rng.uniform(0.1, 0.5), rng)
        res = min_vertex_cover(g)
        c = vc_coloring(g, res)
        assert is_harmonious(g, c).ok
        delta = stats(g).max_degree
        assert c.k <= res.size + delta * delta - delta + 1


def test_vc_coloring_never_below_exact(rng):
    from conftest import random_graph

    for _ in range(15):
        g = random_graph(rng.randint(2, 8), rng.uniform(0.2, 0.6), rng)
        c = vc_coloring(g, min_vertex_cover(g))
        assert c.k >= solve(g).h
