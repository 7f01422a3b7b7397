"""Polynomial-time exact walk optimum on trees.

Works over the inductive decomposition of a rooted tree: every subtree is
grown by repeatedly hanging a finished child subtree under the current
root.  Each subtree carries five tables indexed by the outside weight w
(degree the rest of the tree will add to the root) and the target visible
degree d of the root:

  psi0   no walk at all; finite (0) iff the subtree is locally irregular
         once the root degree is raised by w
  io     walks starting and ending at the root
  i      walks with at least one end at the root
  r      walks passing through the root
  notr   arbitrary walks

The classes are nested, so tables are kept monotone (io >= i >= r >= notr
entrywise) after every combination step.  Combining enumerates the
multiplicity t of the connecting edge and splits the walk into fragments
on the two sides; the per-edge multiplicity cap 2(d(x)+d(y)-1) makes the
tables finite.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import DimensionMismatch, NotATree, NotNice, VertexOutOfRange
from .exact import ExactResult
from .graph import Graph, Walk, is_connected, is_nice
from .walkops import check_irregularising

__all__ = [
    "PsiTable",
    "RootedTree",
    "combine_tables",
    "psi_leaf_table",
    "tree_mlw",
]

_SHAPES = ("io", "i", "r", "notr")


class RootedTree:
    """A tree with a distinguished root and ascending children lists."""

    __slots__ = ("graph", "root", "children", "parent")

    def __init__(self, graph: Graph, root: int):
        if not 0 <= root < graph.n:
            raise VertexOutOfRange(f"root {root} not in 0..{graph.n - 1}")
        if graph.m != graph.n - 1 or not is_connected(graph):
            raise NotATree(f"{graph!r} is not a tree")
        self.graph = graph
        self.root = root
        parent: List[Optional[int]] = [None] * graph.n
        children: List[Tuple[int, ...]] = [()] * graph.n
        stack = [root]
        seen = [False] * graph.n
        seen[root] = True
        while stack:
            v = stack.pop()
            kids = []
            for u in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    kids.append(u)
                    stack.append(u)
            children[v] = tuple(kids)
        self.parent = tuple(parent)
        self.children = tuple(children)

    def postorder(self) -> List[int]:
        out: List[int] = []
        stack: List[Tuple[int, bool]] = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                out.append(v)
                continue
            stack.append((v, True))
            for u in reversed(self.children[v]):
                stack.append((u, False))
        return out


class PsiTable:
    """The five DP tables of one rooted subtree.

    psi0 is one-dimensional in w; the walk shapes are (w, d) matrices.
    Entries hold minimum walk lengths, numpy inf standing for impossible.
    """

    __slots__ = ("psi0", "io", "i", "r", "notr", "w_max", "d_max")

    def __init__(self, w_max: int, d_max: int):
        self.w_max = w_max
        self.d_max = d_max
        self.psi0 = np.full(w_max + 1, np.inf)
        for name in _SHAPES:
            setattr(self, name, np.full((w_max + 1, d_max + 1), np.inf))

    def shape(self, name: str) -> np.ndarray:
        return getattr(self, name)

    def close_monotone(self) -> None:
        np.minimum(self.i, self.io, out=self.i)
        np.minimum(self.r, self.i, out=self.r)
        np.minimum(self.notr, self.r, out=self.notr)

    def is_monotone(self) -> bool:
        return bool(
            np.all(self.io >= self.i)
            and np.all(self.i >= self.r)
            and np.all(self.r >= self.notr)
        )


def psi_leaf_table(w_max: int, d_max: int) -> PsiTable:
    """Base table for a single-vertex tree.

    With no neighbours the vertex is vacuously irregular for every w, so
    psi0 is identically 0; the only walk available is the empty walk at
    the root, visible degree d = w, classified under every shape.
    """
    t = PsiTable(w_max, d_max)
    t.psi0[:] = 0.0
    k = min(w_max, d_max)
    idx = np.arange(k + 1)
    for name in _SHAPES:
        t.shape(name)[idx, idx] = 0.0
    return t


def _min_except(row: np.ndarray, d_size: int) -> np.ndarray:
    # vec[d] = min over d2 != d of row[d2]
    best_idx = int(np.argmin(row))
    best = row[best_idx]
    out = np.full(d_size, best)
    if best_idx < d_size:
        rest = np.delete(row, best_idx)
        out[best_idx] = np.min(rest) if rest.size else np.inf
    return out


def combine_tables(
    parent: PsiTable,
    parent_root_degree: int,
    child: PsiTable,
    child_root_degree: int,
    edge_cap: int,
) -> PsiTable:
    """Table for the tree obtained by hanging ``child`` under ``parent``.

    ``parent_root_degree`` and ``child_root_degree`` are the root degrees
    of the two subtrees before the new edge is added; ``edge_cap`` bounds
    the walk multiplicity t of that edge.  For multiplicity t the parent
    side is consulted at outside weight w+1+t and the child side at 1+t,
    with the child's visible degree forced away from the parent's.
    """
    if parent.w_max < 1 or child.w_max < 1:
        raise DimensionMismatch("tables need w_max >= 1 to absorb the new edge")
    W, D = parent.w_max, parent.d_max
    res = PsiTable(W, D)
    base = parent_root_degree + 1
    vis_child0 = child_root_degree + 1
    dvec = np.arange(D + 1)
    child_still = child.psi0[1] == 0

    # child-side minima over d2 != d, one vector per (t, shape)
    t_hi = min(edge_cap, child.w_max - 1)
    minexc = {}
    for t in range(t_hi + 1):
        for name in _SHAPES:
            minexc[t, name] = _min_except(child.shape(name)[1 + t], D + 1)

    for w in range(W + 1):
        if w + 1 <= W and child_still:
            if parent.psi0[w + 1] == 0 and base + w != vis_child0:
                res.psi0[w] = 0.0

        tmax = min(edge_cap, child.w_max - 1, W - w - 1)
        for t in range(tmax + 1):
            w1 = w + 1 + t
            if t == 0:
                if child_still:
                    mask = dvec != vis_child0
                    for name in _SHAPES:
                        cand = parent.shape(name)[w1]
                        row = res.shape(name)[w]
                        np.minimum(row, np.where(mask, cand, np.inf), out=row)
                # walk confined to the child side
                d_forced = parent_root_degree + w + 1
                if d_forced <= D and parent.psi0[w1] == 0:
                    cand0 = minexc[0, "notr"][d_forced]
                    if cand0 < res.notr[w, d_forced]:
                        res.notr[w, d_forced] = cand0
            elif t % 2 == 0:
                bio = minexc[t, "io"] + t
                np.minimum(res.io[w], parent.io[w1] + bio, out=res.io[w])
                np.minimum(res.i[w], parent.i[w1] + bio, out=res.i[w])
                np.minimum(res.r[w], parent.r[w1] + bio, out=res.r[w])
                np.minimum(
                    res.r[w], parent.io[w1] + minexc[t, "r"] + t, out=res.r[w]
                )
            else:
                bi = minexc[t, "i"] + t
                np.minimum(res.i[w], parent.io[w1] + bi, out=res.i[w])
                np.minimum(res.r[w], parent.i[w1] + bi, out=res.r[w])

        # the empty walk is an io walk whenever the tree stands alone
        if res.psi0[w] == 0 and base + w <= D:
            res.io[w, base + w] = min(res.io[w, base + w], 0.0)

    res.close_monotone()
    return res


# ── solver ───────────────────────────────────────────────────────────────


class _Stage:
    __slots__ = ("table", "child", "cap", "pre_degree", "child_base")

    def __init__(self, table, child, cap, pre_degree, child_base):
        self.table = table
        self.child = child
        self.cap = cap
        self.pre_degree = pre_degree
        self.child_base = child_base


class _Node:
    __slots__ = ("vertex", "stages")

    def __init__(self, vertex, stages):
        self.vertex = vertex
        self.stages = stages


def _table_dim(g: Graph, v: int) -> int:
    return g.degree(v) + 2 * sum(
        g.degree(v) + g.degree(u) - 1 for u in g.adjacency[v]
    )


# Stitching helpers.  Pieces are vertex lists: an io piece starts and ends
# at its root, an i piece starts at it, an r piece contains it; [x] stands
# for the empty walk at x.


def _stitch_io(a, b, v, c, t):
    out = list(a)
    out.append(c)
    out.extend(b[1:])
    out.append(v)
    out.extend([c, v] * ((t - 2) // 2))
    return out


def _stitch_i_even(a, b, v, c, t):
    out = [v, c]
    out.extend(b[1:])
    out.append(v)
    out.extend([c, v] * ((t - 2) // 2))
    out.extend(a[1:])
    return out


def _stitch_i_odd(a, b, v, c, t):
    out = list(a)
    out.extend([c, v] * ((t - 1) // 2))
    out.append(c)
    out.extend(b[1:])
    return out


def _stitch_r_even_parent(a, b, v, c, t):
    idx = a.index(v)
    mid = [c] + list(b[1:]) + [v] + [c, v] * ((t - 2) // 2)
    return list(a[: idx + 1]) + mid + list(a[idx + 1 :])


def _stitch_r_even_child(a, b, v, c, t):
    idx = b.index(c)
    mid = [v] + list(a[1:]) + [c] + [v, c] * ((t - 2) // 2)
    return list(b[: idx + 1]) + mid + list(b[idx + 1 :])


def _stitch_r_odd(a, b, v, c, t):
    out = list(reversed(a))
    out.extend([c, v] * ((t - 1) // 2))
    out.append(c)
    out.extend(b[1:])
    return out


class _Solver:
    def __init__(self, tree: RootedTree, cap_slack: int):
        self.tree = tree
        self.g = tree.graph
        self.slack = cap_slack
        self.nodes: Dict[int, _Node] = {}

    def run(self) -> Tuple[int, List[int]]:
        g, tree = self.g, self.tree
        for v in tree.postorder():
            dim = _table_dim(g, v) + self.slack
            stages = [_Stage(psi_leaf_table(dim, dim), None, 0, 0, 0)]
            for idx, c in enumerate(tree.children[v]):
                cap = 2 * (g.degree(v) + g.degree(c) - 1) + self.slack
                table = combine_tables(
                    stages[-1].table,
                    idx,
                    self.nodes[c].stages[-1].table,
                    len(tree.children[c]),
                    cap,
                )
                stages.append(
                    _Stage(table, self.nodes[c], cap, idx, len(tree.children[c]))
                )
            self.nodes[v] = _Node(v, stages)
        root = self.nodes[tree.root]
        final = root.stages[-1].table
        value = float(np.min(final.notr[0]))
        assert np.isfinite(value), "nice trees always admit a finite optimum"
        d_best = int(np.argmin(final.notr[0]))
        verts = self.replay(root, len(root.stages) - 1, "notr", 0, d_best)
        return int(value), verts

    # Re-derive, for one table entry, which combination produced its value
    # and rebuild the walk bottom-up.
    def replay(self, node: _Node, s: int, shape: str, w: int, d: int) -> List[int]:
        v = node.vertex
        stage = node.stages[s]
        tab = stage.table
        val = tab.shape(shape)[w, d]
        assert np.isfinite(val)
        if s == 0:
            assert val == 0 and d == w
            return [v]
        prev = node.stages[s - 1].table
        child = stage.child
        ctab = child.stages[-1].table
        c = child.vertex
        base = stage.pre_degree + 1
        vis_child0 = stage.child_base + 1
        child_still = ctab.psi0[1] == 0
        tmax = min(stage.cap, ctab.w_max - 1, tab.w_max - w - 1)

        def child_arg(shape_b: str, wb: int, target: float) -> Optional[int]:
            row = ctab.shape(shape_b)[wb]
            for d2 in range(ctab.d_max + 1):
                if d2 != d and row[d2] == target:
                    return d2
            return None

        def sub(shape_a: str, w1: int) -> List[int]:
            return self.replay(node, s - 1, shape_a, w1, d)

        def csub(shape_b: str, wb: int, d2: int) -> List[int]:
            return self.replay(child, len(child.stages) - 1, shape_b, wb, d2)

        if shape == "io":
            if val == 0 and tab.psi0[w] == 0 and d == base + w:
                return [v]
            if (
                w + 1 <= prev.w_max
                and child_still
                and d != vis_child0
                and prev.io[w + 1, d] == val
            ):
                return sub("io", w + 1)
            for t in range(2, tmax + 1, 2):
                a_val = prev.io[w + 1 + t, d]
                if not np.isfinite(a_val):
                    continue
                d2 = child_arg("io", 1 + t, val - a_val - t)
                if d2 is not None:
                    return _stitch_io(
                        sub("io", w + 1 + t), csub("io", 1 + t, d2), v, c, t
                    )
            raise AssertionError("io entry has no producing case")

        if shape == "i":
            if (
                w + 1 <= prev.w_max
                and child_still
                and d != vis_child0
                and prev.i[w + 1, d] == val
            ):
                return sub("i", w + 1)
            for t in range(1, tmax + 1):
                w1 = w + 1 + t
                if t % 2 == 0:
                    a_val = prev.i[w1, d]
                    if np.isfinite(a_val):
                        d2 = child_arg("io", 1 + t, val - a_val - t)
                        if d2 is not None:
                            return _stitch_i_even(
                                sub("i", w1), csub("io", 1 + t, d2), v, c, t
                            )
                else:
                    a_val = prev.io[w1, d]
                    if np.isfinite(a_val):
                        d2 = child_arg("i", 1 + t, val - a_val - t)
                        if d2 is not None:
                            return _stitch_i_odd(
                                sub("io", w1), csub("i", 1 + t, d2), v, c, t
                            )
            return self.replay(node, s, "io", w, d)

        if shape == "r":
            if (
                w + 1 <= prev.w_max
                and child_still
                and d != vis_child0
                and prev.r[w + 1, d] == val
            ):
                return sub("r", w + 1)
            for t in range(1, tmax + 1):
                w1 = w + 1 + t
                if t % 2 == 0:
                    a_val = prev.r[w1, d]
                    if np.isfinite(a_val):
                        d2 = child_arg("io", 1 + t, val - a_val - t)
                        if d2 is not None:
                            return _stitch_r_even_parent(
                                sub("r", w1), csub("io", 1 + t, d2), v, c, t
                            )
                    a_val = prev.io[w1, d]
                    if np.isfinite(a_val):
                        d2 = child_arg("r", 1 + t, val - a_val - t)
                        if d2 is not None:
                            return _stitch_r_even_child(
                                sub("io", w1), csub("r", 1 + t, d2), v, c, t
                            )
                else:
                    a_val = prev.i[w1, d]
                    if np.isfinite(a_val):
                        d2 = child_arg("i", 1 + t, val - a_val - t)
                        if d2 is not None:
                            return _stitch_r_odd(
                                sub("i", w1), csub("i", 1 + t, d2), v, c, t
                            )
            return self.replay(node, s, "i", w, d)

        assert shape == "notr"
        if (
            w + 1 <= prev.w_max
            and child_still
            and d != vis_child0
            and prev.notr[w + 1, d] == val
        ):
            return sub("notr", w + 1)
        d_forced = stage.pre_degree + w + 1
        if d == d_forced and w + 1 <= prev.w_max and prev.psi0[w + 1] == 0:
            d2 = child_arg("notr", 1, val)
            if d2 is not None:
                return csub("notr", 1, d2)
        return self.replay(node, s, "r", w, d)


def tree_mlw(t: RootedTree, cap_slack: int = 0) -> ExactResult:
    """Exact optimal walk length for a nice tree, with a witness.

    ``cap_slack`` enlarges every table dimension and per-edge multiplicity
    cap; the answer must not depend on it (the caps are provably
    sufficient), which the robustness tests exercise.
    """
    g = t.graph
    if not is_nice(g):
        raise NotNice(f"{g!r} is not nice")
    value, verts = _Solver(t, cap_slack).run()
    walk = Walk(()) if len(verts) <= 1 else Walk(tuple(verts))
    report = check_irregularising(g, walk)
    assert report.ok and walk.length == value
    return ExactResult.finite(value, walk)
