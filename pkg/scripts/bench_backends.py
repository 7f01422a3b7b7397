#!/usr/bin/env python3
"""Time the compiled search kernel against the pure-Python fallback.

Both kernels enumerate candidate walks in the same order, so they must
return identical witnesses; this script asserts that while timing the
iterative-deepening loop each kernel drives.  Run with --heavy to add a
deeper instance (several seconds for the Python kernel).
"""

from __future__ import annotations

import argparse
import json
import random
import time

from irregwalk._backend import get_kernel
from irregwalk.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_nice_graph,
)


def iddfs(kern, g):
    degs = list(g.degrees())
    k = 0
    while True:
        walk = kern.search_walk_at_length(g.adjacency, degs, k)
        if walk is not None:
            return k, tuple(walk)
        k += 1


def instances(heavy: bool):
    rng = random.Random(2024)
    out = [
        ("K_5", complete_graph(5)),
        ("K_{3,3}", complete_bipartite(3, 3)),
        ("C_7", cycle_graph(7)),
        ("P_9", path_graph(9)),
        ("gnp(8)", random_nice_graph(8, rng)),
    ]
    if heavy:
        out.append(("K_6", complete_graph(6)))
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    compiled = get_kernel("compiled")
    python = get_kernel("python")

    rows = []
    for name, g in instances(args.heavy):
        t0 = time.perf_counter()
        vc, wc = iddfs(compiled, g)
        tc = time.perf_counter() - t0
        t0 = time.perf_counter()
        vp, wp = iddfs(python, g)
        tp = time.perf_counter() - t0
        assert (vc, wc) == (vp, wp), f"kernel mismatch on {name}"
        rows.append({
            "instance": name, "n": g.n, "m": g.m, "value": vc,
            "compiled_s": round(tc, 4), "python_s": round(tp, 4),
            "speedup": round(tp / tc, 1) if tc > 0 else None,
        })

    if args.json:
        print(json.dumps({"schema": 1, "rows": rows}, indent=2))
        return 0
    print(f"{'instance':<10} {'n':>3} {'m':>3} {'value':>5} "
          f"{'compiled':>10} {'python':>10} {'speedup':>8}")
    for r in rows:
        print(f"{r['instance']:<10} {r['n']:>3} {r['m']:>3} {r['value']:>5} "
              f"{r['compiled_s']:>9.4f}s {r['python_s']:>9.4f}s {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
