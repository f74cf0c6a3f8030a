"""Independent brute-force references built on networkx."""

from itertools import combinations

import networkx as nx
import pytest

from fvs_local import build_graph


def to_nx(g, drop=()):
    h = nx.MultiGraph()
    h.add_nodes_from(v for v in g.vertices if v not in drop)
    h.add_edges_from((u, v) for u, v in g.edges if u not in drop and v not in drop)
    return h


def nx_forest(g, drop=()):
    h = to_nx(g, drop)
    return h.number_of_nodes() == 0 or nx.is_forest(h)


def nx_bipartite(g, drop=()):
    h = to_nx(g, drop)
    if any(u == v for u, v in h.edges()):
        return False
    return nx.is_bipartite(nx.Graph(h))


def brute_min(g, feasible):
    vs = sorted(g.vertices)
    for k in range(len(vs) + 1):
        for S in combinations(vs, k):
            if feasible(g, set(S)):
                return k
    raise AssertionError("unreachable")


def brute_fvs(g):
    return brute_min(g, lambda g, S: nx_forest(g, S))


def brute_oct(g):
    return brute_min(g, lambda g, S: nx_bipartite(g, S))


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
