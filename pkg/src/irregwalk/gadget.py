"""Hardness-reduction gadgets built from cubic bipartite graphs.

Both builders decorate every vertex of the input graph H with pendant
trees so that the only way to irregularise the result with a short walk
(or with any simple path) is to trace a Hamiltonian cycle of H.  A small
backtracking Hamiltonian-cycle oracle rounds the module out, so the
reduction can be cross-validated end to end on desk-scale inputs.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Tuple

from .errors import NotBipartite, NotConnected, NotCubic
from .graph import Graph, build_graph, is_connected

__all__ = [
    "GadgetInstance",
    "build_path_gadget",
    "build_walk_gadget",
    "hamiltonian_cycle",
]


class GadgetInstance:
    """A reduction output graph with its bookkeeping.

    ``k`` is the walk-length budget (the order of H) for the walk gadget
    and None for the path gadget.  H's vertices keep their indices in the
    output graph; ``h_vertices`` maps them back and ``side`` records the
    bipartition tag ('U' or 'V') the construction used for each.
    """

    __slots__ = ("g", "k", "h_vertices", "side")

    def __init__(self, g: Graph, k: Optional[int], h_vertices: Dict[int, int],
                 side: Tuple[str, ...]):
        self.g = g
        self.k = k
        self.h_vertices = h_vertices
        self.side = side


def _bipartition(h: Graph) -> Tuple[str, ...]:
    # breadth-first 2-colouring; vertex 0 lands on side U
    colour = [-1] * h.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in h.adjacency[v]:
            if colour[u] == -1:
                colour[u] = 1 - colour[v]
                queue.append(u)
            elif colour[u] == colour[v]:
                raise NotBipartite(f"{h!r} contains an odd cycle")
    return tuple("U" if c == 0 else "V" for c in colour)


def _check_input(h: Graph) -> Tuple[str, ...]:
    if h.n < 2 or not is_connected(h):
        raise NotConnected(f"{h!r} is not connected")
    side = _bipartition(h)
    if any(h.degree(v) != 3 for v in range(h.n)):
        raise NotCubic(f"{h!r} is not 3-regular")
    return side


class _Builder:
    # structural vertices get ids first; plain leaves are appended at the
    # end, grouped by their anchor in ascending id order
    def __init__(self, k: int):
        self.next_id = k
        self.edges: List[Tuple[int, int]] = []
        self.leaf_demand: List[Tuple[int, int]] = []

    def structural(self, anchor: int, leaves: int = 0) -> int:
        vid = self.next_id
        self.next_id += 1
        self.edges.append((anchor, vid))
        if leaves:
            self.leaf_demand.append((vid, leaves))
        return vid

    def leaves_for(self, vid: int, count: int) -> None:
        if count:
            self.leaf_demand.append((vid, count))

    def finish(self) -> Graph:
        for vid, count in self.leaf_demand:
            for _ in range(count):
                self.edges.append((vid, self.next_id))
                self.next_id += 1
        return build_graph(self.edges, self.next_id)


def build_walk_gadget(h: Graph) -> GadgetInstance:
    """Decorated graph whose walk optimum is |V(H)| iff H is Hamiltonian.

    Around each U-vertex: a_u carrying 4 leaves and b_u carrying 5, giving
    degrees d(u) = d(a_u) = 5 and d(b_u) = 6.  Around each V-vertex: a_v
    with 5 leaves, b_v with 6, and a pendant c_v, giving d(v) = d(a_v) = 6,
    d(b_v) = 7, d(c_v) = 1.  A walk tracing a Hamiltonian cycle of H lifts
    the H-degrees by exactly 2, separating every conflicting pair at once.
    """
    side = _check_input(h)
    b = _Builder(h.n)
    b.edges.extend(h.edges())
    for x in range(h.n):
        if side[x] == "U":
            b.structural(x, leaves=4)
            b.structural(x, leaves=5)
        else:
            b.structural(x, leaves=5)
            b.structural(x, leaves=6)
            b.structural(x)  # pendant c_v
    g = b.finish()
    for x in range(h.n):
        want = 5 if side[x] == "U" else 6
        assert g.degree(x) == want
    return GadgetInstance(g, h.n, {x: x for x in range(h.n)}, side)


_RAISED = {
    # anchor kind -> (degrees of the four raised neighbours, plain leaves)
    "a_u": ((6, 6, 7, 7), 0),
    "b_u": ((7, 7, 8, 8), 1),
    "a_v": ((7, 7, 8, 8), 1),
    "c_v": ((7, 7, 8, 8), 1),
    "b_v": ((8, 8, 9, 9), 2),
}


def build_path_gadget(h: Graph) -> GadgetInstance:
    """Variant whose irregularising simple paths exist iff H is Hamiltonian.

    Same skeleton as the walk gadget, but every pendant tree is deepened:
    each of a_u (degree 5), b_u (6), a_v (6), c_v (6), b_v (7) gets four
    neighbours of raised degree (6,6,7,7 around a_u, one more around the
    others, 8,8,9,9 around b_v) so that no short cheating walk, only a
    genuine spanning path through H, can fix the conflicts.
    """
    side = _check_input(h)
    b = _Builder(h.n)
    b.edges.extend(h.edges())
    for x in range(h.n):
        kinds = ("a_u", "b_u") if side[x] == "U" else ("a_v", "b_v", "c_v")
        for kind in kinds:
            raised, plain = _RAISED[kind]
            anchor = b.structural(x, leaves=plain)
            for deg in raised:
                b.structural(anchor, leaves=deg - 1)
    g = b.finish()
    for x in range(h.n):
        want = 5 if side[x] == "U" else 6
        assert g.degree(x) == want
    return GadgetInstance(g, None, {x: x for x in range(h.n)}, side)


def hamiltonian_cycle(h: Graph) -> Optional[List[int]]:
    """A Hamiltonian cycle of h as a vertex list, or None.

    Backtracking in ascending neighbour order from vertex 0, so the result
    is deterministic: the lexicographically smallest cycle starting at 0.
    Intended for desk-scale graphs (up to roughly 20 vertices).
    """
    n = h.n
    if n < 3:
        return None
    visited = [False] * n
    visited[0] = True
    path = [0]

    def extend() -> bool:
        if len(path) == n:
            return 0 in h.adjacency[path[-1]]
        for u in h.adjacency[path[-1]]:
            if not visited[u]:
                visited[u] = True
                path.append(u)
                if extend():
                    return True
                path.pop()
                visited[u] = False
        return False

    return path if extend() else None
