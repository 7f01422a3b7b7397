"""Shared fixtures: the worked example instance and small random helpers."""

from __future__ import annotations

import random
from typing import List, Tuple

from irregwalk.graph import Graph, Walk, build_graph

# tree whose walk [1,2,3,2,3,4,3,4,6] is irregularising; final degrees
# (3,6,8,7,5 on the spine) are pairwise distinct from every neighbour
FIGURE_EDGES: List[Tuple[int, int]] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (4, 6),
    (6, 7),
    (6, 8),
    (6, 9),
    (9, 10),
    (9, 11),
    (9, 12),
]
FIGURE_WALK: List[int] = [1, 2, 3, 2, 3, 4, 3, 4, 6]


def figure_instance() -> Tuple[Graph, Walk]:
    return build_graph(FIGURE_EDGES, 13), Walk(tuple(FIGURE_WALK))


def random_walk_on(g: Graph, length: int, rng: random.Random) -> Walk:
    """Uniform random walk with `length` edges; start weighted by nothing."""
    cur = rng.randrange(g.n)
    verts = [cur]
    for _ in range(length):
        cur = rng.choice(g.adjacency[cur])
        verts.append(cur)
    return Walk(tuple(verts))
