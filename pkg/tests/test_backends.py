"""The compiled and pure-Python kernels must agree witness for witness."""

import pytest

from irregwalk._backend import backend_name, get_kernel
from irregwalk.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)


def _kernels():
    kp = get_kernel("python")
    try:
        kc = get_kernel("compiled")
    except ImportError:
        pytest.skip("compiled backend not built")
    return kp, kc


GRAPHS = [
    complete_graph(3),
    complete_graph(4),
    path_graph(4),
    path_graph(5),
    cycle_graph(4),
    cycle_graph(5),
    complete_bipartite(2, 3),
    complete_bipartite(2, 2),
]


def _parts(g):
    adj = [list(nb) for nb in g.adjacency]
    degs = list(g.degrees())
    eidx = {e: i for i, e in enumerate(g.edges())}
    return adj, degs, eidx


def test_backend_name_is_known():
    assert backend_name() in ("python", "compiled")


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_fixed_length_walks_identical(g):
    kp, kc = _kernels()
    adj, degs, _ = _parts(g)
    for k in range(9):
        assert kp.search_walk_at_length(adj, degs, k) == kc.search_walk_at_length(adj, degs, k)


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_capped_walks_identical(g):
    kp, kc = _kernels()
    adj, degs, eidx = _parts(g)
    for cap in range(4):
        assert kp.search_walk_edge_capped(adj, degs, eidx, cap) == kc.search_walk_edge_capped(
            adj, degs, eidx, cap
        )
        assert kp.search_walk_vertex_capped(adj, degs, 2 * cap) == kc.search_walk_vertex_capped(
            adj, degs, 2 * cap
        )


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_simple_paths_identical(g):
    kp, kc = _kernels()
    adj, degs, _ = _parts(g)
    for k in range(g.n + 1):
        assert kp.search_path_at_length(adj, degs, k) == kc.search_path_at_length(adj, degs, k)


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"n{g.n}m{g.m}")
def test_labellings_identical(g):
    kp, kc = _kernels()
    adj, degs, _ = _parts(g)
    edges = g.edges()
    for objective in (0, 1, 2):
        for max_label in (2, 3):
            a = kp.search_labelling(adj, edges, objective, max_label)
            b = kc.search_labelling(adj, edges, objective, max_label)
            if a is None:
                assert b is None
            else:
                assert list(a[0]) == list(b[0])
                assert a[1] == b[1]


def test_starts_restriction_identical():
    kp, kc = _kernels()
    g = complete_graph(4)
    adj, degs, _ = _parts(g)
    for starts in ((1,), (2, 0), (3, 1, 2)):
        assert kp.search_walk_at_length(adj, degs, 3, starts) == kc.search_walk_at_length(
            adj, degs, 3, starts
        )
