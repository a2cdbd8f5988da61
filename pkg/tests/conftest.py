import numpy as np
import pytest

from swarmroute import WeightedGraph

# Five nodes, eight unit-weight links; the small dense example used across
# the docs and fixtures.
FIVE_NODE_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]

# Six nodes, six unit-weight links; the decode walkthrough network, built so
# the greedy priority walk from node 1 to node 6 visits every node once.
WALKTHROUGH_EDGES = [(0, 2), (1, 2), (1, 4), (3, 4), (3, 5), (4, 5)]

WALKTHROUGH_PRIORITIES = [2.0, 6.0, 4.0, 9.0, 5.0, 7.0]


def unit_graph(node_count, edges, directed=False):
    return WeightedGraph(node_count, [(u, v, 1.0) for u, v in edges], directed=directed)


@pytest.fixture
def five_node_graph():
    return unit_graph(5, FIVE_NODE_EDGES)


@pytest.fixture
def walkthrough_graph():
    return unit_graph(6, WALKTHROUGH_EDGES)


def random_connected_graph(rng, n, p, weight_low=1.0, weight_high=10.0, int_weights=False):
    """Rejection-sample an Erdos-Renyi graph until connected."""
    while True:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    if int_weights:
                        w = float(rng.integers(int(weight_low), int(weight_high) + 1))
                    else:
                        w = float(rng.uniform(weight_low, weight_high))
                    edges.append((u, v, w))
        g = WeightedGraph(n, edges, directed=False)
        if g.is_connected():
            return g


def random_graph(rng, n, p, weight_low=1.0, weight_high=10.0):
    """Erdos-Renyi draw with no connectivity requirement."""
    edges = [
        (u, v, float(rng.uniform(weight_low, weight_high)))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return WeightedGraph(n, edges, directed=False)


def complete_graph(rng, n, weight_low=1.0, weight_high=10.0):
    edges = [
        (u, v, float(rng.uniform(weight_low, weight_high)))
        for u in range(n)
        for v in range(u + 1, n)
    ]
    return WeightedGraph(n, edges, directed=False)
