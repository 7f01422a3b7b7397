"""Polynomial-time constructions of irregularising walks with certified bounds.

Three constructions:

- a half-turn greedy along a spanning closed guide walk, output length at
  most p + 2m for a guide of length p;
- a colour-class variant that steers every settled degree into a residue
  class determined by a proper vertex colouring, output length at most
  p + (n-1)(2k-2) + 2*Delta;
- a doubled-Euler-tour walk driven by a proper edge labelling, output length
  exactly 2m + 2q(x - m) with q = floor(3*Delta/2) and x the label sum.

All three return a BoundedWitness whose walk has been re-verified.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ._backend import kernel
from .errors import (
    BadGuide,
    ImproperColouring,
    ImproperLabelling,
    NoLabellingWithinCap,
    NotConnected,
    NotNice,
)
from .graph import Edge, Graph, Walk, is_connected, is_nice, max_degree, norm_edge
from .walkops import check_irregularising

MIN_SUM = "min-sum"
MIN_MAX_LABEL = "min-max-label"
MIN_MAX_VERTEX_SUM = "min-max-vertex-sum"

_OBJECTIVE_CODE = {
    MIN_SUM: kernel.OBJ_MIN_SUM,
    MIN_MAX_LABEL: kernel.OBJ_MIN_MAX_LABEL,
    MIN_MAX_VERTEX_SUM: kernel.OBJ_MIN_MAX_VERTEX_SUM,
}


# ──────────────────────────────────────────────────────────────────────────
# Domain types
# ──────────────────────────────────────────────────────────────────────────


class ProperLabelling:
    """Edge labelling with pairwise distinct sums at adjacent vertices.

    sums[v] caches sigma(v) = sum of labels on edges at v.  Properness is
    enforced at construction time.
    """

    __slots__ = ("labels", "sums")

    def __init__(self, g: Graph, labels: Mapping[Edge, int]):
        canon: Dict[Edge, int] = {}
        for e, lab in labels.items():
            canon[norm_edge(*e)] = lab
        missing = [e for e in g.edges() if e not in canon]
        if missing or len(canon) != g.m:
            raise ImproperLabelling(f"labelling does not match the edge set (missing {missing})")
        if any(lab < 1 for lab in canon.values()):
            raise ImproperLabelling("labels must be >= 1")
        sums = [0] * g.n
        for (u, v), lab in canon.items():
            sums[u] += lab
            sums[v] += lab
        for u, v in g.edges():
            if sums[u] == sums[v]:
                raise ImproperLabelling(f"equal sums {sums[u]} at adjacent vertices {u}, {v}")
        self.labels = canon
        self.sums = tuple(sums)

    def sigma(self, v: int) -> int:
        return self.sums[v]

    def label_sum(self) -> int:
        return sum(self.labels.values())

    def max_label(self) -> int:
        return max(self.labels.values())

    def max_vertex_sum(self) -> int:
        return max(self.sums)

    def __repr__(self) -> str:
        return f"ProperLabelling({dict(sorted(self.labels.items()))})"


class VertexColouring:
    """Colours 0..k-1, one per vertex."""

    __slots__ = ("colours", "k")

    def __init__(self, colours: Sequence[int], k: int):
        if k < 1:
            raise ImproperColouring(f"need at least one colour, got k={k}")
        if any(not (0 <= c < k) for c in colours):
            raise ImproperColouring(f"colours must lie in 0..{k - 1}")
        self.colours = tuple(colours)
        self.k = k

    def is_proper(self, g: Graph) -> bool:
        return all(self.colours[u] != self.colours[v] for u, v in g.edges())

    def degree_class(self, degree: int) -> int:
        """Index i of the class containing `degree`.

        Class i holds the degrees d with floor((d+1)/2) = i+1 (mod k); each
        class contains consecutive pairs {2a-1, 2a}, so adding 2 to a degree
        advances its class by one (mod k).
        """
        return ((degree + 1) // 2 - 1) % self.k

    def __repr__(self) -> str:
        return f"VertexColouring({list(self.colours)}, k={self.k})"


class BoundedWitness:
    """An irregularising walk together with the guarantee that produced it."""

    __slots__ = ("walk", "bound", "theorem")

    def __init__(self, walk: Walk, bound: int, theorem: str):
        if walk.length > bound:
            raise ValueError(f"walk length {walk.length} exceeds certified bound {bound}")
        self.walk = walk
        self.bound = bound
        self.theorem = theorem

    @property
    def length(self) -> int:
        return self.walk.length

    def __repr__(self) -> str:
        return f"BoundedWitness(length={self.walk.length}, bound={self.bound}, theorem={self.theorem!r})"


# ──────────────────────────────────────────────────────────────────────────
# Guides
# ──────────────────────────────────────────────────────────────────────────


def guiding_closed_walk(g: Graph) -> Walk:
    """Closed spanning walk of length exactly 2(n-1): a doubled DFS tree.

    Starts at the lowest-index vertex of degree > 1 so the greedy passes have
    a second start neighbour to finish on (falls back to vertex 0 when no
    such vertex exists, i.e. on a single edge).
    """
    if not is_connected(g):
        raise NotConnected(f"guide needs a connected graph, got {g!r}")
    start = next((v for v in range(g.n) if g.degree(v) > 1), 0)
    walk = [start]
    seen = [False] * g.n
    seen[start] = True
    # iterative DFS, neighbours ascending; appending on entry and on return
    # doubles every tree edge
    stack = [(start, 0)]
    while stack:
        u, idx = stack.pop()
        nbrs = g.adjacency[u]
        while idx < len(nbrs) and seen[nbrs[idx]]:
            idx += 1
        if idx == len(nbrs):
            if stack:
                walk.append(stack[-1][0])
            continue
        v = nbrs[idx]
        stack.append((u, idx + 1))
        seen[v] = True
        walk.append(v)
        stack.append((v, 0))
    return Walk(tuple(walk))


def _validate_guide(g: Graph, verts: Tuple[int, ...]) -> None:
    if len(verts) < 3:
        raise BadGuide("guide must be a closed walk with at least two edges")
    if verts[0] != verts[-1]:
        raise BadGuide("guide walk must be closed")
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            raise BadGuide(f"guide steps along the non-edge ({a}, {b})")
    if len(set(verts)) != g.n:
        raise BadGuide("guide walk must visit every vertex")
    if g.degree(verts[0]) < 2:
        raise BadGuide(f"guide start {verts[0]} needs degree > 1")


# ──────────────────────────────────────────────────────────────────────────
# Half-turn greedy
# ──────────────────────────────────────────────────────────────────────────


def greedy_irregularise(g: Graph, guide: Walk) -> BoundedWitness:
    """Follow the guide, settling each vertex at its last visit.

    Settling u before moving on to w appends half-turns w-u-w until u's
    degree avoids every settled neighbour's (those degrees are final).  At
    the guide's second-to-last step the next vertex (the guide's endpoint)
    is additionally kept away from the degree of the finishing neighbour
    v2, so that the closing half-turns along endpoint-v2, which shift both
    ends in lockstep, can never collide.  Output length <= p + 2m.
    """
    if not is_nice(g):
        raise NotNice(f"{g!r} admits no irregularising walk")
    verts = guide.vertices
    _validate_guide(g, verts)
    p = len(verts) - 1
    u0 = verts[0]
    v1 = verts[-2]
    v2 = next(x for x in g.adjacency[u0] if x != v1)

    degs = list(g.degrees())
    last_occ: Dict[int, int] = {v: i for i, v in enumerate(verts)}
    settled = [False] * g.n
    walk = [u0]

    for i in range(p):
        cur, nxt = verts[i], verts[i + 1]
        walk.append(nxt)
        degs[cur] += 1
        degs[nxt] += 1
        if last_occ[cur] != i or cur == v2:
            continue
        forbidden = {degs[x] for x in g.adjacency[cur] if settled[x]}
        h = 0
        if i == p - 1:
            while degs[cur] + 2 * h in forbidden or degs[nxt] + 2 * h == degs[v2]:
                h += 1
        else:
            while degs[cur] + 2 * h in forbidden:
                h += 1
        if h:
            walk.extend([cur, nxt] * h)
            degs[cur] += 2 * h
            degs[nxt] += 2 * h
        settled[cur] = True

    # closing phase: settle the endpoint and v2 together; their degrees move
    # in lockstep, so the separation arranged at step p-1 is preserved
    up = verts[-1]
    f_up = {degs[x] for x in g.adjacency[up] if settled[x]}
    f_v2 = {degs[x] for x in g.adjacency[v2] if settled[x]}
    h = 0
    while degs[up] + 2 * h in f_up or degs[v2] + 2 * h in f_v2:
        h += 1
    if h:
        walk.extend([v2, up] * h)
        degs[up] += 2 * h
        degs[v2] += 2 * h

    out = Walk(tuple(walk))
    assert check_irregularising(g, out).ok
    return BoundedWitness(out, p + 2 * g.m, "guided-half-turn")


# ──────────────────────────────────────────────────────────────────────────
# Colour-class variant
# ──────────────────────────────────────────────────────────────────────────


def chromatic_irregularise(g: Graph, guide: Walk, col: VertexColouring) -> BoundedWitness:
    """Settle each vertex into the degree class of its colour.

    Adjacent vertices carry different colours, so settled degrees in
    different classes can never collide; at most k-1 half-turns are needed
    per vertex since consecutive half-turns cycle through all k classes.
    The endpoint and v2 are finished with a back-and-forth run of any
    length along their shared edge.  Output length <=
    p + (n-1)(2k-2) + 2*Delta.
    """
    if not is_nice(g):
        raise NotNice(f"{g!r} admits no irregularising walk")
    verts = guide.vertices
    _validate_guide(g, verts)
    if len(col.colours) != g.n:
        raise ImproperColouring("one colour per vertex required")
    if not col.is_proper(g):
        raise ImproperColouring("adjacent vertices share a colour")
    k = col.k
    p = len(verts) - 1
    u0 = verts[0]
    v1 = verts[-2]
    v2 = next(x for x in g.adjacency[u0] if x != v1)

    degs = list(g.degrees())
    last_occ: Dict[int, int] = {v: i for i, v in enumerate(verts)}
    settled = [False] * g.n
    walk = [u0]

    for i in range(p):
        cur, nxt = verts[i], verts[i + 1]
        walk.append(nxt)
        degs[cur] += 1
        degs[nxt] += 1
        if last_occ[cur] != i or cur == v2:
            continue
        # unique h in 0..k-1 lands cur's degree in its colour class
        h = (col.colours[cur] + 1 - (degs[cur] + 1) // 2) % k
        if i == p - 1 and degs[nxt] + 2 * h == degs[v2]:
            # the lockstep-separation constraint rules out at most one
            # candidate; the next representative sits one full cycle up
            h += k
        if h:
            walk.extend([cur, nxt] * h)
            degs[cur] += 2 * h
            degs[nxt] += 2 * h
        settled[cur] = True

    up = verts[-1]
    f_up = {degs[x] for x in g.adjacency[up] if settled[x]}
    f_v2 = {degs[x] for x in g.adjacency[v2] if settled[x]}
    run = 0
    while degs[up] + run in f_up or degs[v2] + run in f_v2:
        run += 1
    for t in range(run):
        walk.append(v2 if t % 2 == 0 else up)
    degs[up] += run
    degs[v2] += run

    out = Walk(tuple(walk))
    assert check_irregularising(g, out).ok
    bound = p + (g.n - 1) * (2 * k - 2) + 2 * max_degree(g)
    return BoundedWitness(out, bound, "colour-class")


def greedy_vertex_colouring(g: Graph) -> VertexColouring:
    """Sequential greedy in ascending vertex order; k <= Delta + 1."""
    colours = [0] * g.n
    for v in range(g.n):
        taken = {colours[u] for u in g.adjacency[v] if u < v}
        c = 0
        while c in taken:
            c += 1
        colours[v] = c
    return VertexColouring(colours, max(colours) + 1 if g.n else 1)


# ──────────────────────────────────────────────────────────────────────────
# Labelling-driven doubled Euler tour
# ──────────────────────────────────────────────────────────────────────────


def doubled_euler_tour(g: Graph) -> Walk:
    """Closed walk traversing every edge exactly twice.

    Duplicating each edge makes all degrees even, so an Euler circuit of the
    doubled multigraph exists; it is built with the usual stack-based
    circuit algorithm, taking copies in ascending neighbour order.
    """
    if not is_connected(g):
        raise NotConnected(f"Euler tour needs a connected graph, got {g!r}")
    if g.m == 0:
        return Walk((0,)) if g.n else Walk(())
    # two copies of each incidence, ascending by neighbour
    slots = [[nb for nb in nbrs for _ in range(2)] for nbrs in g.adjacency]
    ptr = [0] * g.n
    remaining = Counter()
    for u, v in g.edges():
        remaining[(u, v)] = 2
    stack = [0]
    circuit = []
    while stack:
        u = stack[-1]
        row = slots[u]
        while ptr[u] < len(row) and remaining[norm_edge(u, row[ptr[u]])] == 0:
            ptr[u] += 1
        if ptr[u] == len(row):
            circuit.append(stack.pop())
            continue
        v = row[ptr[u]]
        ptr[u] += 1
        remaining[norm_edge(u, v)] -= 1
        stack.append(v)
    circuit.reverse()
    return Walk(tuple(circuit))


def labelling_irregularise(g: Graph, lab: ProperLabelling) -> BoundedWitness:
    """Double-Euler walk with q*(label-1) half-turns on each second traversal.

    With q = floor(3*Delta/2), every vertex ends at degree
    3 d(u) + 2q (sigma(u) - d(u)): vertices with equal label-sum excess are
    separated because the labelling is proper, and unequal excesses differ
    by at least 2q, more than any original-degree gap can close.  Length is
    exactly 2m + 2q(x - m) for label sum x.
    """
    if not is_nice(g):
        raise NotNice(f"{g!r} admits no irregularising walk")
    for u, v in g.edges():
        if lab.sums[u] == lab.sums[v]:
            raise ImproperLabelling(f"equal sums at adjacent vertices {u}, {v}")
    delta = max_degree(g)
    q = (3 * delta) // 2
    tour = doubled_euler_tour(g)
    degs = list(g.degrees())
    seen: Counter = Counter()
    walk = [tour.vertices[0]]
    for a, b in tour.steps():
        walk.append(b)
        degs[a] += 1
        degs[b] += 1
        e = norm_edge(a, b)
        seen[e] += 1
        if seen[e] == 2:
            turns = q * (lab.labels[e] - 1)
            if turns:
                walk.extend([a, b] * turns)
                degs[a] += 2 * turns
                degs[b] += 2 * turns
    # closed-form degree law: every vertex lands exactly here
    for v in range(g.n):
        assert degs[v] == 3 * g.degree(v) + 2 * q * (lab.sigma(v) - g.degree(v))
    out = Walk(tuple(walk))
    assert check_irregularising(g, out).ok
    x = lab.label_sum()
    return BoundedWitness(out, 2 * g.m + 2 * q * (x - g.m), "doubled-euler-labelling")


# ──────────────────────────────────────────────────────────────────────────
# Brute-forced optimal labellings
# ──────────────────────────────────────────────────────────────────────────


def exact_proper_labelling(g: Graph, objective: str = MIN_SUM, max_label: int = 3) -> ProperLabelling:
    """Optimal proper labelling with labels in 1..max_label.

    Desk-scale enumeration; max_label = 3 always suffices for nice graphs,
    so NoLabellingWithinCap signals a non-nice input or a lowered cap.
    """
    if not is_nice(g):
        raise NotNice(f"{g!r} has no proper labelling of interest")
    if objective not in _OBJECTIVE_CODE:
        raise ValueError(f"unknown objective {objective!r}")
    found = kernel.search_labelling(
        g.adjacency, g.edges(), _OBJECTIVE_CODE[objective], max_label
    )
    if found is None:
        raise NoLabellingWithinCap(f"no proper labelling with labels <= {max_label}")
    labels, _value = found
    return ProperLabelling(g, dict(zip(g.edges(), labels)))
