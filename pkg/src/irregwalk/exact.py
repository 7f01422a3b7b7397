"""Exact brute-force oracles.

Ground truth for everything else in the package: exact minimum walk length
(ML^W), minimum max per-edge traversal count (ME^W), minimum max per-vertex
walk-edge count (MV^W), shortest irregularising simple path, and minimum
irregularising edge multiset size (phi).  All searches enumerate candidates
in a fixed deterministic order (start vertices ascending, neighbours
ascending) and return the first witness found.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement
from typing import List, Optional

from ._backend import kernel
from .graph import EdgeMultiset, Graph, Walk, is_nice

__all__ = [
    "ExactResult",
    "default_mlw_budget",
    "default_mew_cap",
    "default_mvw_cap",
    "exact_mlw",
    "exact_mew",
    "exact_mvw",
    "exists_irregularising_path",
    "exact_phi",
]


class ExactResult:
    """Outcome of an exact search.

    status is one of:
      finite    — value attained, witness supplied;
      infinite  — provably no solution exists (not just unfound);
      exhausted — search space up to the given budget/cap contained none.
    """

    __slots__ = ("status", "value", "witness", "budget")

    def __init__(self, status: str, value: Optional[int], witness, budget: Optional[int]):
        self.status = status
        self.value = value
        self.witness = witness
        self.budget = budget

    @classmethod
    def finite(cls, value: int, witness) -> "ExactResult":
        return cls("finite", value, witness, None)

    @classmethod
    def infinite(cls) -> "ExactResult":
        return cls("infinite", None, None, None)

    @classmethod
    def exhausted(cls, budget: int) -> "ExactResult":
        return cls("exhausted", None, None, budget)

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.status == "infinite"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactResult)
            and (self.status, self.value, self.witness, self.budget)
            == (other.status, other.value, other.witness, other.budget)
        )

    def __repr__(self) -> str:
        if self.status == "finite":
            return f"ExactResult({self.value}, witness={self.witness!r})"
        if self.status == "infinite":
            return "ExactResult(Infinite)"
        return f"ExactResult(Exhausted, budget={self.budget})"


def default_mlw_budget(g: Graph) -> int:
    # every nice graph has an irregularising walk of length <= 2(m + n - 1)
    return 2 * (g.m + g.n - 1)


def default_mew_cap(g: Graph) -> int:
    # traversing xy more than 2(d(x)+d(y)-1) times is never necessary
    return max((2 * (g.degree(u) + g.degree(v) - 1) for u, v in g.edges()), default=0)


def default_mvw_cap(g: Graph) -> int:
    return max(
        (
            sum(2 * (g.degree(v) + g.degree(u) - 1) for u in g.adjacency[v])
            for v in range(g.n)
        ),
        default=0,
    )


def _edge_index(g: Graph) -> dict:
    return {e: i for i, e in enumerate(g.edges())}


def exact_mlw(
    g: Graph,
    budget: Optional[int] = None,
    workers: int = 1,
) -> ExactResult:
    """Minimum irregularising walk length by iterative deepening.

    Returns Infinite for non-nice graphs, Exhausted(budget) when the budget
    was too small.  The default budget always suffices for nice graphs.
    """
    if not is_nice(g):
        # the parameter is defined over nice graphs only
        return ExactResult.infinite()
    if budget is None:
        budget = default_mlw_budget(g)
    degs = list(g.degrees())
    if workers > 1:
        found = _parallel_mlw(g, degs, budget, workers)
        if found is not None:
            return ExactResult.finite(len(found) - 1 if found else 0, Walk(found))
        return ExactResult.exhausted(budget)
    for k in range(budget + 1):
        walk = kernel.search_walk_at_length(g.adjacency, degs, k)
        if walk is not None:
            return ExactResult.finite(k, Walk(walk))
    return ExactResult.exhausted(budget)


def _search_one_start(args) -> Optional[List[int]]:
    adj, degs, k, start = args
    return kernel.search_walk_at_length(adj, degs, k, starts=(start,))


def _parallel_mlw(g: Graph, degs, budget: int, workers: int) -> Optional[List[int]]:
    """Split each depth's search by start vertex; merge keeps the smallest start.

    The merged outcome is identical to the sequential scan, which tries start
    vertices in ascending order.
    """
    import multiprocessing

    if kernel.search_walk_at_length(g.adjacency, degs, 0) is not None:
        return []
    with multiprocessing.Pool(workers) as pool:
        for k in range(1, budget + 1):
            jobs = [(g.adjacency, degs, k, s) for s in range(g.n)]
            for found in pool.imap(_search_one_start, jobs):
                if found is not None:
                    pool.terminate()
                    return found
    return None


def exact_mew(g: Graph, cap: Optional[int] = None) -> ExactResult:
    """Minimum over irregularising walks of the max per-edge traversal count."""
    if not is_nice(g):
        return ExactResult.infinite()
    if cap is None:
        cap = default_mew_cap(g)
    degs = list(g.degrees())
    index = _edge_index(g)
    for c in range(cap + 1):
        walk = kernel.search_walk_edge_capped(g.adjacency, degs, index, c)
        if walk is not None:
            return ExactResult.finite(c, Walk(walk))
    return ExactResult.exhausted(cap)


def exact_mvw(g: Graph, cap: Optional[int] = None) -> ExactResult:
    """Minimum over irregularising walks of the max walk-edges at one vertex."""
    if not is_nice(g):
        return ExactResult.infinite()
    if cap is None:
        cap = default_mvw_cap(g)
    degs = list(g.degrees())
    for c in range(cap + 1):
        walk = kernel.search_walk_vertex_capped(g.adjacency, degs, c)
        if walk is not None:
            return ExactResult.finite(c, Walk(walk))
    return ExactResult.exhausted(cap)


def exists_irregularising_path(g: Graph) -> ExactResult:
    """Shortest irregularising simple path or cycle, or Infinite.

    Simple paths have all vertices distinct; a cycle repeats only its first
    vertex as its last.  Length is capped structurally at n, so exhaustion
    here is a proof of nonexistence.
    """
    degs = list(g.degrees())
    for k in range(g.n + 1):
        walk = kernel.search_path_at_length(g.adjacency, degs, k)
        if walk is not None:
            return ExactResult.finite(k, Walk(walk))
    return ExactResult.infinite()


def exact_phi(g: Graph, budget: Optional[int] = None) -> ExactResult:
    """Minimum cardinality of an irregularising edge multiset.

    Multisets are enumerated by increasing total cardinality with per-edge
    multiplicity capped at 2(d(x)+d(y)-1); exhausting all capped multisets
    proves Infinite, while hitting a smaller caller budget yields Exhausted.
    """
    edges = g.edges()
    caps = [2 * (g.degree(u) + g.degree(v) - 1) for u, v in edges]
    full = sum(caps)
    capped_by_budget = budget is not None and budget < full
    limit = min(budget, full) if budget is not None else full
    degs0 = g.degrees()
    for total in range(limit + 1):
        for combo in combinations_with_replacement(range(len(edges)), total):
            counts = Counter(combo)
            if any(counts[i] > caps[i] for i in counts):
                continue
            degs = list(degs0)
            for i, c in counts.items():
                u, v = edges[i]
                degs[u] += c
                degs[v] += c
            if all(degs[u] != degs[v] for u, v in edges):
                ms = EdgeMultiset(Counter({edges[i]: c for i, c in counts.items()}))
                return ExactResult.finite(total, ms)
    if capped_by_budget:
        return ExactResult.exhausted(limit)
    return ExactResult.infinite()
