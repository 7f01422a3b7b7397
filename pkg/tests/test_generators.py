"""Graph family constructors and random instance generators."""

from __future__ import annotations

import random

import pytest

from irregwalk.errors import OrderTooSmall
from irregwalk.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_gnp,
    random_cubic_bipartite,
    random_nice_graph,
    random_tree,
    subdivided_star,
)
from irregwalk.graph import is_connected, is_nice


def test_fixed_families():
    p = path_graph(4)
    assert (p.n, p.m) == (5, 4)
    assert p.degree(0) == 1 and p.degree(2) == 2
    c = cycle_graph(5)
    assert (c.n, c.m) == (5, 5)
    assert all(c.degree(v) == 2 for v in range(5))
    k = complete_graph(6)
    assert (k.n, k.m) == (6, 15)
    b = complete_bipartite(2, 3)
    assert (b.n, b.m) == (5, 6)
    assert b.degree(0) == 3 and b.degree(2) == 2
    assert path_graph(0).n == 1


def test_subdivided_star():
    s = subdivided_star(3, 2)
    assert (s.n, s.m) == (7, 6)
    assert s.degree(0) == 3
    assert sorted(s.degree(v) for v in range(1, 7)) == [1, 1, 1, 2, 2, 2]


def test_order_too_small():
    cases = [
        lambda: path_graph(-1),
        lambda: cycle_graph(2),
        lambda: complete_graph(0),
        lambda: complete_bipartite(0, 3),
        lambda: subdivided_star(0, 2),
        lambda: subdivided_star(2, 0),
        lambda: random_tree(0, random.Random(0)),
        lambda: random_connected_gnp(0, 0.5, random.Random(0)),
        lambda: random_cubic_bipartite(2, random.Random(0)),
        lambda: random_nice_graph(2, random.Random(0)),
    ]
    for thunk in cases:
        with pytest.raises(OrderTooSmall):
            thunk()


def test_random_tree():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(1, 14)
        t = random_tree(n, rng)
        assert t.n == n and t.m == n - 1
        assert is_connected(t)


def test_random_connected_gnp():
    rng = random.Random(10)
    for _ in range(40):
        n = rng.randint(2, 12)
        g = random_connected_gnp(n, 0.4, rng)
        assert g.n == n
        assert is_connected(g)


def test_random_cubic_bipartite():
    rng = random.Random(11)
    for s in (3, 4, 5, 6):
        g = random_cubic_bipartite(s, rng)
        assert g.n == 2 * s
        assert all(g.degree(v) == 3 for v in range(g.n))
        # even/odd vertex classes form the bipartition of the base cycle,
        # and the matching respects it
        for u, v in g.edges():
            assert u % 2 != v % 2


def test_random_nice_graph():
    rng = random.Random(12)
    for _ in range(60):
        g = random_nice_graph(rng.randint(3, 12), rng)
        assert is_nice(g)


def test_seeded_generators_are_deterministic():
    a = random_nice_graph(9, random.Random(77))
    b = random_nice_graph(9, random.Random(77))
    assert a.adjacency == b.adjacency
    t1 = random_tree(10, random.Random(5))
    t2 = random_tree(10, random.Random(5))
    assert t1.adjacency == t2.adjacency
