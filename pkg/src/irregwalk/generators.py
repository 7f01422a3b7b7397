"""Graph families for the solver CLI, the benchmark harness, and tests.

Deterministic families are plain constructors; random families draw from a
caller-supplied `random.Random` so a fixed seed reproduces the same graph.
"""

from __future__ import annotations

import heapq
import random
from typing import List

from .errors import OrderTooSmall
from .graph import Edge, Graph, build_graph, is_connected


def path_graph(length: int) -> Graph:
    """Path with `length` edges on vertices 0..length."""
    if length < 0:
        raise OrderTooSmall(f"path length must be >= 0, got {length}")
    return build_graph([(i, i + 1) for i in range(length)], length + 1)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OrderTooSmall(f"cycle needs n >= 3, got {n}")
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise OrderTooSmall(f"complete graph needs n >= 1, got {n}")
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise OrderTooSmall(f"complete bipartite needs both sides >= 1, got ({a}, {b})")
    return build_graph([(i, a + j) for i in range(a) for j in range(b)], a + b)


def subdivided_star(branches: int, branch_length: int) -> Graph:
    """`branches` paths of `branch_length` edges, glued at a central vertex 0."""
    if branches < 1 or branch_length < 1:
        raise OrderTooSmall(
            f"subdivided star needs branches >= 1 and branch_length >= 1, got ({branches}, {branch_length})"
        )
    edges: List[Edge] = []
    nxt = 1
    for _ in range(branches):
        prev = 0
        for _ in range(branch_length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(edges, nxt)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree (Prüfer decode)."""
    if n < 1:
        raise OrderTooSmall(f"tree needs n >= 1, got {n}")
    if n == 1:
        return build_graph([], 1)
    if n == 2:
        return build_graph([(0, 1)], 2)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: List[Edge] = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(edges, n)


def random_connected_gnp(n: int, p: float, rng: random.Random, max_tries: int = 1000) -> Graph:
    """Erdős–Rényi G(n, p), resampled until connected."""
    if n < 1:
        raise OrderTooSmall(f"gnp needs n >= 1, got {n}")
    for _ in range(max_tries):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = build_graph(edges, n)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample within {max_tries} tries")


def random_cubic_bipartite(s: int, rng: random.Random, max_tries: int = 1000) -> Graph:
    """Cubic bipartite graph on 2s vertices: Hamiltonian cycle plus a random
    perfect matching between the two parity classes, avoiding cycle edges."""
    if s < 3:
        raise OrderTooSmall(f"cubic bipartite needs s >= 3, got {s}")
    n = 2 * s
    cycle = [(i, (i + 1) % n) for i in range(n)]
    evens = [2 * i for i in range(s)]
    odds = [2 * i + 1 for i in range(s)]
    for _ in range(max_tries):
        perm = odds[:]
        rng.shuffle(perm)
        # matching edge at u may not duplicate either incident cycle edge
        if all(perm[i] != (u + 1) % n and perm[i] != (u - 1) % n for i, u in enumerate(evens)):
            return build_graph(cycle + list(zip(evens, perm)), n)
    raise RuntimeError(f"no valid matching for s={s} within {max_tries} tries")


def random_nice_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.3) -> Graph:
    """Random connected graph on n >= 3 vertices: spanning tree plus extras."""
    if n < 3:
        raise OrderTooSmall(f"random nice graph needs n >= 3, got {n}")
    tree = random_tree(n, rng)
    present = set(tree.edges())
    extras: List[Edge] = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in present and rng.random() < extra_edge_prob:
                extras.append((i, j))
    return build_graph(list(tree.edges()) + extras, n)
