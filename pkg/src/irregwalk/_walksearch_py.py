"""Pure-Python search kernels.

Reference implementations of the hot brute-force loops: walk enumeration for
exact ML^W / ME^W / MV^W, simple-path enumeration, and the proper-labelling
branch and bound.  The compiled extension `_walksearch` mirrors these
routines step for step; both must visit candidates in identical order so
that witnesses are bit-identical whichever backend is active.

Conventions shared by both backends:
  - adjacency lists are sorted ascending; DFS extends by ascending neighbour;
  - start vertices are tried in ascending order;
  - the first candidate found in this order is returned.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

BACKEND_NAME = "python"


def _conflict_count(adj: Sequence[Sequence[int]], degs: List[int]) -> int:
    total = 0
    for u in range(len(adj)):
        for v in adj[u]:
            if u < v and degs[u] == degs[v]:
                total += 1
    return total


def _local_conflicts(adj: Sequence[Sequence[int]], degs: List[int], x: int) -> int:
    d = degs[x]
    c = 0
    for w in adj[x]:
        if degs[w] == d:
            c += 1
    return c


def _step_delta(adj, degs, u: int, v: int) -> int:
    """Conflict-count change when walk step uv bumps both degrees by one."""
    before = _local_conflicts(adj, degs, u) + _local_conflicts(adj, degs, v)
    if degs[u] == degs[v]:
        before -= 1  # the uv edge was counted from both sides
    degs[u] += 1
    degs[v] += 1
    after = _local_conflicts(adj, degs, u) + _local_conflicts(adj, degs, v)
    if degs[u] == degs[v]:
        after -= 1
    return after - before


def _unstep(degs, u: int, v: int) -> None:
    degs[u] -= 1
    degs[v] -= 1


# ──────────────────────────────────────────────────────────────────────────
# Fixed-length walk search (ML^W)
# ──────────────────────────────────────────────────────────────────────────


def search_walk_at_length(
    adj: Sequence[Sequence[int]],
    base_degs: Sequence[int],
    k: int,
    starts: Optional[Sequence[int]] = None,
) -> Optional[List[int]]:
    """First (lexicographically smallest) irregularising walk of length exactly k."""
    n = len(adj)
    degs = list(base_degs)
    conflicts = _conflict_count(adj, degs)
    if k == 0:
        return [] if conflicts == 0 else None
    walk = [0] * (k + 1)

    def extend(cur: int, depth: int, conf: int) -> bool:
        if depth == k:
            return conf == 0
        for nxt in adj[cur]:
            walk[depth + 1] = nxt
            delta = _step_delta(adj, degs, cur, nxt)
            if extend(nxt, depth + 1, conf + delta):
                return True
            _unstep(degs, cur, nxt)
        return False

    for s in starts if starts is not None else range(n):
        walk[0] = s
        if extend(s, 0, conflicts):
            return walk[: k + 1]
    return None


# ──────────────────────────────────────────────────────────────────────────
# Capped walk search (ME^W / MV^W)
# ──────────────────────────────────────────────────────────────────────────


def search_walk_edge_capped(
    adj: Sequence[Sequence[int]],
    base_degs: Sequence[int],
    edge_index: dict,
    cap: int,
    starts: Optional[Sequence[int]] = None,
) -> Optional[List[int]]:
    """First irregularising walk traversing every edge at most cap times.

    Tests every prefix (pre-order), so the returned walk is minimal in the
    DFS order, not in length.  cap bounds walk length by m * cap.
    """
    n = len(adj)
    degs = list(base_degs)
    conflicts = _conflict_count(adj, degs)
    if conflicts == 0:
        return []
    if cap == 0:
        return None
    used = [0] * len(edge_index)
    walk: List[int] = []

    def extend(cur: int, conf: int) -> bool:
        for nxt in adj[cur]:
            e = edge_index[(cur, nxt) if cur < nxt else (nxt, cur)]
            if used[e] == cap:
                continue
            used[e] += 1
            walk.append(nxt)
            delta = _step_delta(adj, degs, cur, nxt)
            if conf + delta == 0 or extend(nxt, conf + delta):
                return True
            _unstep(degs, cur, nxt)
            walk.pop()
            used[e] -= 1
        return False

    for s in starts if starts is not None else range(n):
        walk.append(s)
        if extend(s, conflicts):
            return walk
        walk.pop()
    return None


def search_walk_vertex_capped(
    adj: Sequence[Sequence[int]],
    base_degs: Sequence[int],
    cap: int,
    starts: Optional[Sequence[int]] = None,
) -> Optional[List[int]]:
    """First irregularising walk with at most cap walk-edges at any vertex."""
    n = len(adj)
    degs = list(base_degs)
    conflicts = _conflict_count(adj, degs)
    if conflicts == 0:
        return []
    if cap == 0:
        return None
    slots = [0] * n
    walk: List[int] = []

    def extend(cur: int, conf: int) -> bool:
        if slots[cur] == cap:
            return False
        for nxt in adj[cur]:
            if slots[nxt] == cap:
                continue
            slots[cur] += 1
            slots[nxt] += 1
            walk.append(nxt)
            delta = _step_delta(adj, degs, cur, nxt)
            if conf + delta == 0 or extend(nxt, conf + delta):
                return True
            _unstep(degs, cur, nxt)
            walk.pop()
            slots[cur] -= 1
            slots[nxt] -= 1
        return False

    for s in starts if starts is not None else range(n):
        walk.append(s)
        if extend(s, conflicts):
            return walk
        walk.pop()
    return None


# ──────────────────────────────────────────────────────────────────────────
# Simple paths and cycles
# ──────────────────────────────────────────────────────────────────────────


def search_path_at_length(
    adj: Sequence[Sequence[int]],
    base_degs: Sequence[int],
    k: int,
    starts: Optional[Sequence[int]] = None,
) -> Optional[List[int]]:
    """First irregularising simple path (or cycle) of length exactly k.

    Cycles are paths whose final vertex closes back to the start; all other
    vertices are distinct.  k = 0 tests the empty path.
    """
    n = len(adj)
    degs = list(base_degs)
    conflicts = _conflict_count(adj, degs)
    if k == 0:
        return [] if conflicts == 0 else None
    visited = [False] * n
    walk = [0] * (k + 1)

    def extend(cur: int, depth: int, conf: int, start: int) -> bool:
        if depth == k:
            return conf == 0
        for nxt in adj[cur]:
            closing = nxt == start and depth + 1 == k and k >= 3
            if visited[nxt] and not closing:
                continue
            walk[depth + 1] = nxt
            if not closing:
                visited[nxt] = True
            delta = _step_delta(adj, degs, cur, nxt)
            if extend(nxt, depth + 1, conf + delta, start):
                return True
            _unstep(degs, cur, nxt)
            if not closing:
                visited[nxt] = False
        return False

    for s in starts if starts is not None else range(n):
        walk[0] = s
        visited[s] = True
        if extend(s, 0, conflicts, s):
            return walk[: k + 1]
        visited[s] = False
    return None


# ──────────────────────────────────────────────────────────────────────────
# Proper-labelling branch and bound
# ──────────────────────────────────────────────────────────────────────────

OBJ_MIN_SUM = 0
OBJ_MIN_MAX_LABEL = 1
OBJ_MIN_MAX_VERTEX_SUM = 2


def search_labelling(
    adj: Sequence[Sequence[int]],
    edges: Sequence[Tuple[int, int]],
    objective: int,
    max_label: int,
) -> Optional[Tuple[List[int], int]]:
    """Optimal proper labelling under the chosen objective, labels in 1..max_label.

    Returns (labels aligned with `edges`, objective value), or None when no
    proper labelling exists within the label cap.  Ties are broken by the
    lexicographically smallest label vector: the DFS assigns labels in
    ascending order and an incumbent is never replaced by an equal-value one.
    """
    n = len(adj)
    m = len(edges)
    sigma = [0] * n
    rem = [len(adj[v]) for v in range(n)]
    labels = [0] * m
    best_labels: Optional[List[int]] = None
    best_value = 0

    def vertex_ok(x: int) -> bool:
        # x just became complete; complete neighbours must differ in sum
        for w in adj[x]:
            if rem[w] == 0 and sigma[w] == sigma[x]:
                return False
        return True

    def bound(idx: int, cur_sum: int, cur_max: int) -> int:
        if objective == OBJ_MIN_SUM:
            return cur_sum + (m - idx)
        if objective == OBJ_MIN_MAX_LABEL:
            return cur_max
        return max(sigma[v] + rem[v] for v in range(n))

    def assign(idx: int, cur_sum: int, cur_max: int) -> None:
        nonlocal best_labels, best_value
        if idx == m:
            value = bound(idx, cur_sum, cur_max)
            if best_labels is None or value < best_value:
                best_labels = labels[:]
                best_value = value
            return
        u, v = edges[idx]
        for lab in range(1, max_label + 1):
            labels[idx] = lab
            sigma[u] += lab
            sigma[v] += lab
            rem[u] -= 1
            rem[v] -= 1
            ok = (rem[u] > 0 or vertex_ok(u)) and (rem[v] > 0 or vertex_ok(v))
            if ok:
                b = bound(idx + 1, cur_sum + lab, max(cur_max, lab))
                if best_labels is None or b < best_value:
                    assign(idx + 1, cur_sum + lab, max(cur_max, lab))
            rem[u] += 1
            rem[v] += 1
            sigma[u] -= lab
            sigma[v] -= lab
        labels[idx] = 0

    assign(0, 0, 0)
    if best_labels is None:
        return None
    return best_labels, best_value
