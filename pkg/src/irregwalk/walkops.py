"""Walk verification and canonical normal forms.

A walk is *irregularising* when adding its edges (with multiplicity) to the
base graph leaves no two adjacent vertices with equal degrees.  Any walk is
equivalent, edge-multiset-wise, to a walk that *follows* a short base walk S
with interleaved half-turns; `normalize_walk` computes such a form for
arbitrary graphs and `normalize_path_walk` the sharper one available on paths.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import EmptyWalk, InvalidWalk
from .graph import (
    Edge,
    EdgeMultiset,
    Graph,
    Walk,
    degree_profile,
    norm_edge,
    validate_walk,
)

__all__ = [
    "ConflictReport",
    "NormalForm",
    "check_irregularising",
    "normalize_walk",
    "normalize_path_walk",
    "expand_normal_form",
]


class ConflictReport:
    """Adjacent vertex pairs sharing a degree in G+W."""

    __slots__ = ("conflicts",)

    def __init__(self, conflicts: Sequence[Edge] = ()):
        # sorted lexicographically for stable diffing
        self.conflicts = tuple(sorted(norm_edge(*e) for e in conflicts))

    @property
    def ok(self) -> bool:
        return not self.conflicts

    def __bool__(self) -> bool:
        return self.ok

    def __eq__(self, other) -> bool:
        return isinstance(other, ConflictReport) and self.conflicts == other.conflicts

    def __repr__(self) -> str:
        return f"ConflictReport({list(self.conflicts)})"


class NormalForm:
    """A base walk S plus per-edge half-turn counts.

    The represented walk is u_0 (u_1 u_0)^{i_0} u_1 ... u_{l-1} (u_l u_{l-1})^{i_{l-1}} u_l,
    where S = u_0 ... u_l and i_k = half_turns[k].  e_odd collects the edges
    with odd total multiplicity (appearing once in S), e_even the remaining
    traversed edges (appearing at most twice in S).
    """

    __slots__ = ("base", "half_turns", "e_odd", "e_even")

    def __init__(
        self,
        base: Walk,
        half_turns: Sequence[int],
        e_odd: frozenset,
        e_even: frozenset,
    ):
        if len(half_turns) != base.length:
            raise InvalidWalk("one half-turn count per base edge required")
        if any(h < 0 for h in half_turns):
            raise InvalidWalk("half-turn counts must be nonnegative")
        self.base = base
        self.half_turns = tuple(half_turns)
        self.e_odd = frozenset(e_odd)
        self.e_even = frozenset(e_even)

    @property
    def length(self) -> int:
        """Length of the expanded walk."""
        return self.base.length + 2 * sum(self.half_turns)

    def __repr__(self) -> str:
        return (
            f"NormalForm(base={list(self.base.vertices)}, "
            f"half_turns={list(self.half_turns)})"
        )


def check_irregularising(g: Graph, w: Walk) -> ConflictReport:
    """All adjacent pairs of G with equal degree in G+W (empty iff irregularising)."""
    profile = degree_profile(g, w)
    conflicts = [e for e in g.edges() if profile[e[0]] == profile[e[1]]]
    return ConflictReport(conflicts)


def expand_normal_form(nf: NormalForm) -> Walk:
    """The walk represented by a normal form, half-turns written out."""
    verts = nf.base.vertices
    if len(verts) < 2:
        return Walk(verts)
    seq: List[int] = [verts[0]]
    for k in range(len(verts) - 1):
        a, b = verts[k], verts[k + 1]
        seq.extend([b, a] * nf.half_turns[k])
        seq.append(b)
    return Walk(seq)


# ──────────────────────────────────────────────────────────────────────────
# General normalization: gather each edge's traversals into runs
# ──────────────────────────────────────────────────────────────────────────


def _traversal_positions(seq: List[int], e: Edge) -> List[int]:
    return [
        p
        for p in range(len(seq) - 1)
        if norm_edge(seq[p], seq[p + 1]) == e
    ]


def _gather_edge(seq: List[int], e: Edge) -> List[int]:
    """Rearrange seq so all traversals of e become consecutive runs.

    Splits the walk at the traversals of e, sorts the intermediate subwalks
    by their endpoints relative to e, and reassembles so that e's traversals
    form one run (or two when an even count forces a split).  The edge
    multiset is preserved: pieces are only reordered and possibly reversed.
    """
    pos = _traversal_positions(seq, e)
    n = len(pos)
    if n <= 1:
        return seq
    # x is the start of the first traversal; pieces between traversals are
    # classified by their endpoints (x..x, y..y, or x..y up to reversal).
    x = seq[pos[0]]
    y = seq[pos[0] + 1]
    head = seq[: pos[0] + 1]                     # ends at x
    tail = seq[pos[-1] + 1 :]                    # starts where the last traversal ended
    middles: List[List[int]] = [
        seq[pos[t] + 1 : pos[t + 1] + 1] for t in range(n - 1)
    ]
    w_x: List[List[int]] = []
    w_y: List[List[int]] = []
    w_xy: List[List[int]] = []                   # oriented x -> y
    for mid in middles:
        if mid[0] == x and mid[-1] == x:
            w_x.append(mid)
        elif mid[0] == y and mid[-1] == y:
            w_y.append(mid)
        elif mid[0] == x and mid[-1] == y:
            w_xy.append(mid)
        else:
            w_xy.append(mid[::-1])

    def run(a: int, b: int, count: int) -> List[int]:
        # count traversals of ab starting at a, omitting the initial vertex
        out: List[int] = []
        cur = a
        for _ in range(count):
            cur = b if cur == a else a
            out.append(cur)
        return out

    out: List[int] = list(head)
    for piece in w_x:
        out.extend(piece[1:])
    if w_xy:
        first = w_xy[0]
        out.extend(first[1:])                    # now at y
        for piece in w_y:
            out.extend(piece[1:])
        out.extend(run(y, x, n))                 # all n traversals in one run
        cur = out[-1]
        for piece in w_xy[1:]:
            oriented = piece if piece[0] == cur else piece[::-1]
            out.extend(oriented[1:])
            cur = out[-1]
    elif n % 2 == 1:
        out.extend(run(x, y, n))                 # odd run ends at y
        for piece in w_y:
            out.extend(piece[1:])
    else:
        out.append(y)                            # single traversal x -> y
        for piece in w_y:
            out.extend(piece[1:])
        out.extend(run(y, x, n - 1))             # odd remainder ends at x
    if tail:
        if out[-1] != tail[0]:
            raise InvalidWalk("edge gathering lost walk continuity")
        out.extend(tail[1:])
    return out


def _runs(seq: List[int]) -> List[Tuple[Edge, int, int]]:
    """Maximal runs of a repeated edge: (edge, start position, traversal count)."""
    runs: List[Tuple[Edge, int, int]] = []
    p = 0
    while p < len(seq) - 1:
        e = norm_edge(seq[p], seq[p + 1])
        q = p
        while q < len(seq) - 1 and norm_edge(seq[q], seq[q + 1]) == e:
            q += 1
        runs.append((e, p, q - p))
        p = q
    return runs


def _parse_runs(seq: List[int]) -> NormalForm:
    """Turn a run-gathered walk into (S, half-turn counts)."""
    base: List[int] = [seq[0]]
    half: List[int] = []
    for e, p, count in _runs(seq):
        a = base[-1]
        b = e[1] if a == e[0] else e[0]
        if count % 2 == 1:
            base.append(b)
            half.append((count - 1) // 2)
        else:
            # even run: S crosses twice, all half-turns on the first copy
            base.extend([b, a])
            half.extend([(count - 2) // 2, 0])
    mult = Counter(norm_edge(u, v) for u, v in zip(seq, seq[1:]))
    e_odd = frozenset(e for e, c in mult.items() if c % 2 == 1)
    e_even = frozenset(e for e, c in mult.items() if c % 2 == 0)
    return NormalForm(Walk(base), half, e_odd, e_even)


def normalize_walk(g: Graph, w: Walk) -> NormalForm:
    """Canonical follow-form of a walk: base S with E_o once, E_e at most twice.

    Processes edges in ascending canonical order; each pass makes one edge's
    traversals consecutive and never splits runs created by earlier passes.
    """
    if not validate_walk(g, w):
        raise InvalidWalk("not a walk of the graph")
    if w.length == 0:
        raise EmptyWalk("cannot normalize a walk with no edges")
    seq = list(w.vertices)
    for e in sorted(w.edge_multiset().counts):
        seq = _gather_edge(seq, e)
    nf = _parse_runs(seq)
    if expand_normal_form(nf).edge_multiset() != w.edge_multiset():
        raise InvalidWalk("normalization altered the edge multiset")
    return nf


# ──────────────────────────────────────────────────────────────────────────
# Path-specific normal form
# ──────────────────────────────────────────────────────────────────────────


def normalize_path_walk(path_length: int, w: Walk) -> NormalForm:
    """Normal form of a walk on the path u_0..u_n (n = path_length).

    With i, j the first and last vertex (after reversing so i <= j) and m, M
    the extreme vertices visited, the base is S = u_i..u_m..u_M..u_j and edge
    multiplicities t_k are even on [m, i-1] and [j, M-1], odd on [i, j-1].
    """
    if path_length < 1:
        raise InvalidWalk("path must have at least one edge")
    verts = w.vertices
    if len(verts) < 2:
        raise EmptyWalk("cannot normalize a walk with no edges")
    for a, b in w.steps():
        if abs(a - b) != 1 or not (0 <= min(a, b) and max(a, b) <= path_length):
            raise InvalidWalk(f"({a}, {b}) is not an edge of the path")
    if verts[0] > verts[-1]:
        verts = verts[::-1]
    i, j = verts[0], verts[-1]
    lo, hi = min(verts), max(verts)
    t: Dict[int, int] = Counter(min(a, b) for a, b in zip(verts, verts[1:]))
    for k in range(lo, hi):
        if t[k] == 0:
            raise InvalidWalk("walk must traverse every edge between its extremes")
        odd_zone = i <= k < j
        if (t[k] % 2 == 1) != odd_zone:
            raise InvalidWalk(f"edge multiplicity parity violated at edge {k}")

    base: List[int] = [i]
    half: List[int] = []
    for k in range(i - 1, lo - 1, -1):           # descend: no half-turns yet
        base.append(k)
        half.append(0)
    for k in range(lo, hi):                      # climb to the top
        base.append(k + 1)
        if k < i:
            half.append((t[k] - 2) // 2)
        elif k < j:
            half.append((t[k] - 1) // 2)
        else:
            half.append(0)
    for k in range(hi - 1, j - 1, -1):           # descend to the final vertex
        base.append(k)
        half.append((t[k] - 2) // 2)
    e_odd = frozenset((k, k + 1) for k in range(i, j))
    e_even = frozenset(
        (k, k + 1) for k in list(range(lo, i)) + list(range(j, hi))
    )
    nf = NormalForm(Walk(base), half, e_odd, e_even)
    if expand_normal_form(nf).edge_multiset() != w.edge_multiset():
        raise InvalidWalk("path normalization altered the edge multiset")
    return nf
