"""Core graph, walk, and degree types shared by every other module.

Vertices are dense integer indices 0..n-1; external vertex names are the
business of the I/O layer (see parse_edge_list).  Graphs are simple and
undirected.  Multigraphs never appear as adjacency structures: the multiset
G+W exists only through degree profiles.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import (
    DuplicateEdge,
    EmptyWalk,
    InvalidWalk,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)

Edge = Tuple[int, int]
DegreeProfile = Tuple[int, ...]


def norm_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Immutable simple undirected graph over vertices 0..n-1."""

    __slots__ = ("n", "adjacency", "m", "_edge_set")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.m = sum(len(nbrs) for nbrs in self.adjacency) // 2
        self._edge_set = frozenset(
            norm_edge(u, v) for u in range(n) for v in self.adjacency[u]
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> DegreeProfile:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edge_set

    def edges(self) -> Tuple[Edge, ...]:
        """All edges in ascending (min, max) order."""
        return tuple(sorted(self._edge_set))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Walk:
    """A walk stored as its vertex sequence; may be empty."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int] = ()):
        self.vertices = tuple(vertices)

    @property
    def length(self) -> int:
        """Edge count of the walk."""
        return max(0, len(self.vertices) - 1)

    def is_empty(self) -> bool:
        return len(self.vertices) == 0

    def is_closed(self) -> bool:
        return len(self.vertices) >= 2 and self.vertices[0] == self.vertices[-1]

    def reverse(self) -> "Walk":
        return Walk(reversed(self.vertices))

    def steps(self) -> Iterator[Edge]:
        """Consecutive vertex pairs, in walk order (not normalized)."""
        for a, b in zip(self.vertices, self.vertices[1:]):
            yield (a, b)

    def edge_multiset(self) -> "EdgeMultiset":
        return EdgeMultiset(Counter(norm_edge(a, b) for a, b in self.steps()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Walk) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Walk({list(self.vertices)})"


class EdgeMultiset:
    """Multiset of edges, keyed by canonical (min, max) pairs."""

    __slots__ = ("counts",)

    def __init__(self, counts: Optional[Counter] = None):
        self.counts = Counter()
        if counts:
            for e, c in counts.items():
                if c < 0:
                    raise ValueError(f"negative multiplicity for {e}")
                if c > 0:
                    self.counts[norm_edge(*e)] = c

    def total(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeMultiset) and self.counts == other.counts

    def __repr__(self) -> str:
        return f"EdgeMultiset({dict(sorted(self.counts.items()))})"


def build_graph(edge_list: Iterable[Edge], n: int) -> Graph:
    """Build a simple graph, rejecting self-loops and duplicate edges."""
    adjacency = [[] for _ in range(n)]
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) with n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(n, adjacency)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0."""
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def max_degree(g: Graph) -> int:
    return max((len(nbrs) for nbrs in g.adjacency), default=0)


def is_nice(g: Graph) -> bool:
    """Connected, at least 2 vertices, and not K_2."""
    if g.n < 2:
        return False
    if g.n == 2 and g.m == 1:
        return False
    return is_connected(g)


def validate_walk(g: Graph, w: Walk) -> bool:
    """True iff every consecutive vertex pair of w is an edge of g."""
    for v in w.vertices:
        if not (0 <= v < g.n):
            return False
    return all(g.has_edge(a, b) for a, b in w.steps())


def degree_profile(g: Graph, w: Walk) -> DegreeProfile:
    """Per-vertex degrees of the multigraph G+W.

    Each walk edge adds 1 to both endpoints, traversals counted with
    multiplicity.
    """
    if not validate_walk(g, w):
        raise InvalidWalk(f"walk {w!r} is not a walk of {g!r}")
    degs = [g.degree(v) for v in range(g.n)]
    for a, b in w.steps():
        degs[a] += 1
        degs[b] += 1
    return tuple(degs)


def is_locally_irregular(g: Graph, profile: Optional[DegreeProfile] = None) -> bool:
    """No two adjacent vertices share a degree (under the given profile)."""
    degs = profile if profile is not None else g.degrees()
    return all(degs[u] != degs[v] for u, v in g.edges())


# ── edge-list and walk text formats ──────────────────────────────────────


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text edge-list format.

    One `u v` pair per line, whitespace-separated, 0-indexed.  `#` starts a
    comment line.  An optional leading `n <count>` line fixes the vertex
    count; otherwise n is max index + 1.
    """
    n: Optional[int] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or edges:
                raise ParseError(f"line {lineno}: 'n' line must come first")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"line {lineno}: malformed 'n' line")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}")
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(u, v) for u, v in edges), default=-1)
    try:
        return build_graph(edges, n)
    except (SelfLoop, DuplicateEdge, VertexOutOfRange) as exc:
        raise ParseError(str(exc))


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_walk(text: str) -> Walk:
    """Whitespace-separated vertex indices; empty file means the empty walk."""
    parts = text.split()
    try:
        return Walk(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"non-integer vertex index in walk file")


def format_walk(w: Walk) -> str:
    return " ".join(str(v) for v in w.vertices) + "\n"
