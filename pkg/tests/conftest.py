import random

import pytest

from harmonium import from_edge_list


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


@pytest.fixture
def rng():
    return random.Random(12345)
