# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels.

Same contract and candidate ordering as `_walksearch_py`: start vertices
ascending, neighbours ascending, first hit returned.  Any change here must
be applied to the pure-Python module as well; the backend-equivalence tests
compare the two on small inputs.
"""

from cpython cimport array
import array

BACKEND_NAME = "compiled"

cdef array.array _INT_TEMPLATE = array.array("i", [])


cdef array.array _as_int_array(values):
    cdef array.array out = array.clone(_INT_TEMPLATE, len(values), 0)
    cdef Py_ssize_t i
    for i in range(len(values)):
        out.data.as_ints[i] = values[i]
    return out


def _csr(adj):
    """Adjacency lists flattened to (start offsets, neighbour array)."""
    starts = [0]
    flat = []
    for nbrs in adj:
        flat.extend(nbrs)
        starts.append(len(flat))
    return _as_int_array(starts), _as_int_array(flat)


cdef inline int _local_conflicts(int[::1] astart, int[::1] aflat, int[::1] degs, int x):
    cdef int c = 0
    cdef int d = degs[x]
    cdef int idx
    for idx in range(astart[x], astart[x + 1]):
        if degs[aflat[idx]] == d:
            c += 1
    return c


cdef int _conflict_count(int n, int[::1] astart, int[::1] aflat, int[::1] degs):
    cdef int total = 0
    cdef int u, idx, v
    for u in range(n):
        for idx in range(astart[u], astart[u + 1]):
            v = aflat[idx]
            if u < v and degs[u] == degs[v]:
                total += 1
    return total


cdef inline int _step_delta(int[::1] astart, int[::1] aflat, int[::1] degs, int u, int v):
    cdef int before = _local_conflicts(astart, aflat, degs, u) + _local_conflicts(astart, aflat, degs, v)
    if degs[u] == degs[v]:
        before -= 1
    degs[u] += 1
    degs[v] += 1
    cdef int after = _local_conflicts(astart, aflat, degs, u) + _local_conflicts(astart, aflat, degs, v)
    if degs[u] == degs[v]:
        after -= 1
    return after - before


# ──────────────────────────────────────────────────────────────────────────
# Fixed-length walk search
# ──────────────────────────────────────────────────────────────────────────


cdef bint _extend_fixed(int[::1] astart, int[::1] aflat, int[::1] degs,
                        int[::1] walk, int cur, int depth, int k, int conf):
    if depth == k:
        return conf == 0
    cdef int idx, nxt, delta
    for idx in range(astart[cur], astart[cur + 1]):
        nxt = aflat[idx]
        walk[depth + 1] = nxt
        delta = _step_delta(astart, aflat, degs, cur, nxt)
        if _extend_fixed(astart, aflat, degs, walk, nxt, depth + 1, k, conf + delta):
            return True
        degs[cur] -= 1
        degs[nxt] -= 1
    return False


def search_walk_at_length(adj, base_degs, k, starts=None):
    """First (lexicographically smallest) irregularising walk of length exactly k."""
    cdef int n = len(adj)
    astart_a, aflat_a = _csr(adj)
    degs_a = _as_int_array(list(base_degs))
    cdef int[::1] astart = astart_a
    cdef int[::1] aflat = aflat_a
    cdef int[::1] degs = degs_a
    cdef int conflicts = _conflict_count(n, astart, aflat, degs)
    cdef int kk = k
    if kk == 0:
        return [] if conflicts == 0 else None
    walk_a = array.clone(_INT_TEMPLATE, kk + 1, 1)
    cdef int[::1] walk = walk_a
    cdef int s
    for s in (range(n) if starts is None else starts):
        walk[0] = s
        if _extend_fixed(astart, aflat, degs, walk, s, 0, kk, conflicts):
            return list(walk_a)
    return None


# ──────────────────────────────────────────────────────────────────────────
# Capped walk searches
# ──────────────────────────────────────────────────────────────────────────


cdef bint _extend_edge_capped(int[::1] astart, int[::1] aflat, int[::1] eflat,
                              int[::1] degs, int[::1] used, int[::1] walk,
                              int* depth, int cur, int cap, int conf):
    cdef int idx, nxt, e, delta
    for idx in range(astart[cur], astart[cur + 1]):
        nxt = aflat[idx]
        e = eflat[idx]
        if used[e] == cap:
            continue
        used[e] += 1
        depth[0] += 1
        walk[depth[0]] = nxt
        delta = _step_delta(astart, aflat, degs, cur, nxt)
        if conf + delta == 0 or _extend_edge_capped(astart, aflat, eflat, degs,
                                                    used, walk, depth, nxt, cap,
                                                    conf + delta):
            return True
        degs[cur] -= 1
        degs[nxt] -= 1
        depth[0] -= 1
        used[e] -= 1
    return False


def search_walk_edge_capped(adj, base_degs, edge_index, cap, starts=None):
    """First irregularising walk traversing every edge at most cap times."""
    cdef int n = len(adj)
    cdef int m = len(edge_index)
    astart_a, aflat_a = _csr(adj)
    # edge id per adjacency slot, aligned with the flattened neighbour array
    eflat_py = []
    for u in range(n):
        for v in adj[u]:
            eflat_py.append(edge_index[(u, v) if u < v else (v, u)])
    eflat_a = _as_int_array(eflat_py)
    degs_a = _as_int_array(list(base_degs))
    cdef int[::1] astart = astart_a
    cdef int[::1] aflat = aflat_a
    cdef int[::1] eflat = eflat_a
    cdef int[::1] degs = degs_a
    cdef int conflicts = _conflict_count(n, astart, aflat, degs)
    if conflicts == 0:
        return []
    cdef int ccap = cap
    if ccap == 0:
        return None
    used_a = array.clone(_INT_TEMPLATE, m, 1)
    walk_a = array.clone(_INT_TEMPLATE, m * ccap + 1, 1)
    cdef int[::1] used = used_a
    cdef int[::1] walk = walk_a
    cdef int depth
    cdef int s
    for s in (range(n) if starts is None else starts):
        depth = 0
        walk[0] = s
        if _extend_edge_capped(astart, aflat, eflat, degs, used, walk, &depth, s, ccap, conflicts):
            return list(walk_a[: depth + 1])
    return None


cdef bint _extend_vertex_capped(int[::1] astart, int[::1] aflat, int[::1] degs,
                                int[::1] slots, int[::1] walk,
                                int* depth, int cur, int cap, int conf):
    if slots[cur] == cap:
        return False
    cdef int idx, nxt, delta
    for idx in range(astart[cur], astart[cur + 1]):
        nxt = aflat[idx]
        if slots[nxt] == cap:
            continue
        slots[cur] += 1
        slots[nxt] += 1
        depth[0] += 1
        walk[depth[0]] = nxt
        delta = _step_delta(astart, aflat, degs, cur, nxt)
        if conf + delta == 0 or _extend_vertex_capped(astart, aflat, degs, slots,
                                                      walk, depth, nxt, cap,
                                                      conf + delta):
            return True
        degs[cur] -= 1
        degs[nxt] -= 1
        depth[0] -= 1
        slots[cur] -= 1
        slots[nxt] -= 1
    return False


def search_walk_vertex_capped(adj, base_degs, cap, starts=None):
    """First irregularising walk with at most cap walk-edges at any vertex."""
    cdef int n = len(adj)
    astart_a, aflat_a = _csr(adj)
    degs_a = _as_int_array(list(base_degs))
    cdef int[::1] astart = astart_a
    cdef int[::1] aflat = aflat_a
    cdef int[::1] degs = degs_a
    cdef int conflicts = _conflict_count(n, astart, aflat, degs)
    if conflicts == 0:
        return []
    cdef int ccap = cap
    if ccap == 0:
        return None
    slots_a = array.clone(_INT_TEMPLATE, n, 1)
    walk_a = array.clone(_INT_TEMPLATE, n * ccap // 2 + 2, 1)
    cdef int[::1] slots = slots_a
    cdef int[::1] walk = walk_a
    cdef int depth
    cdef int s
    for s in (range(n) if starts is None else starts):
        depth = 0
        walk[0] = s
        if _extend_vertex_capped(astart, aflat, degs, slots, walk, &depth, s, ccap, conflicts):
            return list(walk_a[: depth + 1])
    return None


# ──────────────────────────────────────────────────────────────────────────
# Simple paths and cycles
# ──────────────────────────────────────────────────────────────────────────


cdef bint _extend_path(int[::1] astart, int[::1] aflat, int[::1] degs,
                       unsigned char[::1] visited, int[::1] walk,
                       int cur, int depth, int k, int conf, int start):
    if depth == k:
        return conf == 0
    cdef int idx, nxt, delta
    cdef bint closing
    for idx in range(astart[cur], astart[cur + 1]):
        nxt = aflat[idx]
        closing = nxt == start and depth + 1 == k and k >= 3
        if visited[nxt] and not closing:
            continue
        walk[depth + 1] = nxt
        if not closing:
            visited[nxt] = 1
        delta = _step_delta(astart, aflat, degs, cur, nxt)
        if _extend_path(astart, aflat, degs, visited, walk, nxt, depth + 1, k, conf + delta, start):
            return True
        degs[cur] -= 1
        degs[nxt] -= 1
        if not closing:
            visited[nxt] = 0
    return False


def search_path_at_length(adj, base_degs, k, starts=None):
    """First irregularising simple path (or cycle) of length exactly k."""
    cdef int n = len(adj)
    astart_a, aflat_a = _csr(adj)
    degs_a = _as_int_array(list(base_degs))
    cdef int[::1] astart = astart_a
    cdef int[::1] aflat = aflat_a
    cdef int[::1] degs = degs_a
    cdef int conflicts = _conflict_count(n, astart, aflat, degs)
    cdef int kk = k
    if kk == 0:
        return [] if conflicts == 0 else None
    visited_a = array.clone(array.array("B", []), n, 1)
    walk_a = array.clone(_INT_TEMPLATE, kk + 1, 1)
    cdef unsigned char[::1] visited = visited_a
    cdef int[::1] walk = walk_a
    cdef int s
    for s in (range(n) if starts is None else starts):
        walk[0] = s
        visited[s] = 1
        if _extend_path(astart, aflat, degs, visited, walk, s, 0, kk, conflicts, s):
            return list(walk_a)
        visited[s] = 0
    return None


# ──────────────────────────────────────────────────────────────────────────
# Proper-labelling branch and bound
# ──────────────────────────────────────────────────────────────────────────

OBJ_MIN_SUM = 0
OBJ_MIN_MAX_LABEL = 1
OBJ_MIN_MAX_VERTEX_SUM = 2


cdef class _LabSearch:
    cdef int n, m, objective, max_label
    cdef int[::1] astart, aflat, eu, ev, sigma, rem, labels, best_labels
    cdef int best_value
    cdef bint has_best
    cdef object astart_a, aflat_a, eu_a, ev_a, sigma_a, rem_a, labels_a, best_a

    def __init__(self, adj, edges, objective, max_label):
        self.n = len(adj)
        self.m = len(edges)
        self.objective = objective
        self.max_label = max_label
        self.astart_a, self.aflat_a = _csr(adj)
        self.astart = self.astart_a
        self.aflat = self.aflat_a
        self.eu_a = _as_int_array([e[0] for e in edges])
        self.ev_a = _as_int_array([e[1] for e in edges])
        self.eu = self.eu_a
        self.ev = self.ev_a
        self.sigma_a = array.clone(_INT_TEMPLATE, self.n, 1)
        self.sigma = self.sigma_a
        self.rem_a = _as_int_array([len(adj[v]) for v in range(self.n)])
        self.rem = self.rem_a
        self.labels_a = array.clone(_INT_TEMPLATE, self.m, 1)
        self.labels = self.labels_a
        self.best_a = array.clone(_INT_TEMPLATE, self.m, 1)
        self.best_labels = self.best_a
        self.best_value = 0
        self.has_best = False

    cdef bint _vertex_ok(self, int x):
        cdef int idx, w
        for idx in range(self.astart[x], self.astart[x + 1]):
            w = self.aflat[idx]
            if self.rem[w] == 0 and self.sigma[w] == self.sigma[x]:
                return False
        return True

    cdef int _bound(self, int idx, int cur_sum, int cur_max):
        cdef int v, b, t
        if self.objective == 0:
            return cur_sum + (self.m - idx)
        if self.objective == 1:
            return cur_max
        b = 0
        for v in range(self.n):
            t = self.sigma[v] + self.rem[v]
            if t > b:
                b = t
        return b

    cdef void _assign(self, int idx, int cur_sum, int cur_max):
        cdef int u, v, lab, b, value, i
        cdef bint ok
        if idx == self.m:
            value = self._bound(idx, cur_sum, cur_max)
            if (not self.has_best) or value < self.best_value:
                for i in range(self.m):
                    self.best_labels[i] = self.labels[i]
                self.best_value = value
                self.has_best = True
            return
        u = self.eu[idx]
        v = self.ev[idx]
        for lab in range(1, self.max_label + 1):
            self.labels[idx] = lab
            self.sigma[u] += lab
            self.sigma[v] += lab
            self.rem[u] -= 1
            self.rem[v] -= 1
            ok = (self.rem[u] > 0 or self._vertex_ok(u)) and (self.rem[v] > 0 or self._vertex_ok(v))
            if ok:
                b = self._bound(idx + 1, cur_sum + lab, max(cur_max, lab))
                if (not self.has_best) or b < self.best_value:
                    self._assign(idx + 1, cur_sum + lab, max(cur_max, lab))
            self.rem[u] += 1
            self.rem[v] += 1
            self.sigma[u] -= lab
            self.sigma[v] -= lab
        self.labels[idx] = 0

    def run(self):
        self._assign(0, 0, 0)
        if not self.has_best:
            return None
        return list(self.best_a), self.best_value


def search_labelling(adj, edges, objective, max_label):
    """Optimal proper labelling under the chosen objective, labels in 1..max_label."""
    return _LabSearch(adj, list(edges), objective, max_label).run()
