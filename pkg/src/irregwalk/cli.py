"""Command-line front end: verify walks, run solvers, benchmark bounds,
export DOT drawings, build reduction gadgets, and normalize walks.

Exit codes: 0 success / positive answer, 1 negative answer (walk is not
irregularising, no walk within budget, no finite optimum), 2 usage or input
error, 3 internal verification failure (an emitted witness failed its
re-check, which indicates a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from .closedform import (
    mlw_complete,
    mlw_complete_bipartite,
    mlw_cycle,
    mlw_path,
)
from .constructive import (
    MIN_SUM,
    chromatic_irregularise,
    exact_proper_labelling,
    greedy_irregularise,
    greedy_vertex_colouring,
    guiding_closed_walk,
    labelling_irregularise,
)
from .errors import (
    IrregwalkError,
    InvalidWalk,
    MethodInapplicable,
    NoLabellingWithinCap,
    NotATree,
    NotNice,
    OrderTooSmall,
    ParseError,
)
from .exact import exact_mlw
from .gadget import build_path_gadget, build_walk_gadget
from .generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_gnp,
    random_cubic_bipartite,
    random_nice_graph,
    random_tree,
    subdivided_star,
)
from .graph import (
    Graph,
    Walk,
    build_graph,
    format_edge_list,
    format_walk,
    is_connected,
    max_degree,
    parse_edge_list,
    parse_walk,
)
from .treedp import RootedTree, tree_mlw
from .walkops import check_irregularising, expand_normal_form, normalize_walk

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

METHODS = ("exact", "greedy", "chromatic", "labelling", "tree", "closed-form")

SCHEMA = 1


# ───────────────────────── run reports ─────────────────────────


class RunReport:
    """One solver invocation: input, algorithm, outcome, certificate.

    Wall time is shown in the human-readable rendering only, so that JSON
    reports for identical inputs compare byte for byte.
    """

    __slots__ = ("input_desc", "algorithm", "status", "value", "witness",
                 "bound", "wall_ms", "seed")

    def __init__(self, input_desc: str, algorithm: str, status: str,
                 value: Optional[int], witness: Optional[Walk],
                 bound: Optional[int], wall_ms: float, seed: Optional[int]):
        self.input_desc = input_desc
        self.algorithm = algorithm
        self.status = status
        self.value = value
        self.witness = witness
        self.bound = bound
        self.wall_ms = wall_ms
        self.seed = seed

    def to_json(self) -> Dict:
        return {
            "schema": SCHEMA,
            "input": self.input_desc,
            "algorithm": self.algorithm,
            "status": self.status,
            "value": self.value,
            "walk": None if self.witness is None else list(self.witness.vertices),
            "bound": self.bound,
            "seed": self.seed,
        }

    def to_text(self) -> str:
        lines = [
            f"input:     {self.input_desc}",
            f"algorithm: {self.algorithm}",
            f"status:    {self.status}",
            f"value:     {'Infinite' if self.status == 'infinite' else self.value}",
        ]
        if self.witness is not None:
            lines.append(f"walk:      {format_walk(self.witness).strip() or '(empty)'}")
        if self.bound is not None:
            lines.append(f"bound:     {self.bound}")
        if self.seed is not None:
            lines.append(f"seed:      {self.seed}")
        lines.append(f"time:      {self.wall_ms:.1f} ms")
        return "\n".join(lines)


def _emit_report(report: RunReport, g: Graph, as_json: bool) -> int:
    # belt-and-braces: no report leaves without its witness re-checked
    if report.witness is not None:
        conflicts = check_irregularising(g, report.witness)
        if not conflicts.ok or report.witness.length != report.value:
            print(f"internal error: witness failed verification: {conflicts!r}",
                  file=sys.stderr)
            return EXIT_INTERNAL
    if as_json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.to_text())
    return EXIT_OK if report.status == "finite" else EXIT_NEGATIVE


# ───────────────────────── input plumbing ─────────────────────────


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_file(path))


def _load_walk(path: str) -> Walk:
    return parse_walk(_read_file(path))


# ───────────────────────── closed-form recognition ─────────────────────────


def _two_colour(g: Graph) -> Optional[List[int]]:
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if colour[u] == -1:
                colour[u] = 1 - colour[v]
                queue.append(u)
            elif colour[u] == colour[v]:
                return None
    return colour


def _path_order(g: Graph) -> Optional[List[int]]:
    if g.n < 2 or g.m != g.n - 1:
        return None
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    order = [min(ends)]
    prev = -1
    while len(order) < g.n:
        nxt = [u for u in g.adjacency[order[-1]] if u != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _cycle_order(g: Graph) -> Optional[List[int]]:
    if g.n < 3 or g.m != g.n or not is_connected(g):
        return None
    if any(g.degree(v) != 2 for v in range(g.n)):
        return None
    order = [0, g.adjacency[0][0]]
    while len(order) < g.n:
        a, b = order[-2], order[-1]
        order.append(next(u for u in g.adjacency[b] if u != a))
    return order


def _relabel(w: Walk, order: Sequence[int]) -> Walk:
    return Walk(tuple(order[v] for v in w.vertices))


def _solve_closed_form(g: Graph) -> Tuple[str, int, Walk]:
    if not is_connected(g):
        raise MethodInapplicable("closed-form: graph is not connected")
    try:
        if g.m == g.n * (g.n - 1) // 2:
            ans = mlw_complete(g.n)
            return f"closed-form complete K_{g.n}", ans.value, ans.witness
        order = _cycle_order(g)
        if order is not None:
            ans = mlw_cycle(g.n)
            return f"closed-form cycle C_{g.n}", ans.value, _relabel(ans.witness, order)
        order = _path_order(g)
        if order is not None:
            ans = mlw_path(g.m)
            return f"closed-form path P_{g.m}", ans.value, _relabel(ans.witness, order)
        colour = _two_colour(g)
        if colour is not None:
            a_side = sorted(v for v in range(g.n) if colour[v] == 0)
            b_side = sorted(v for v in range(g.n) if colour[v] == 1)
            if g.m == len(a_side) * len(b_side):
                ans = mlw_complete_bipartite(len(a_side), len(b_side))
                return (
                    f"closed-form complete bipartite K_{{{len(a_side)},{len(b_side)}}}",
                    ans.value,
                    _relabel(ans.witness, a_side + b_side),
                )
    except OrderTooSmall as exc:
        raise MethodInapplicable(f"closed-form: {exc}")
    raise MethodInapplicable(
        "closed-form: graph is none of complete / cycle / path / complete bipartite"
    )


# ───────────────────────── solve ─────────────────────────


def _solve_labelling(g: Graph):
    # smallest max-label wins; escalate the cap until a labelling exists
    cap = 3
    while True:
        try:
            return exact_proper_labelling(g, MIN_SUM, max_label=cap)
        except NoLabellingWithinCap:
            cap += 1
            if cap > 2 * max_degree(g) + 2:
                raise


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    desc = f"{args.graph} (n={g.n}, m={g.m})"
    t0 = time.perf_counter()
    bound: Optional[int] = None
    try:
        if args.method == "exact":
            res = exact_mlw(g, budget=args.budget)
            status, value, witness = res.status, res.value, res.witness
            algorithm = "exact iterative deepening"
        elif args.method == "greedy":
            bw = greedy_irregularise(g, guiding_closed_walk(g))
            status, value, witness, bound = "finite", bw.walk.length, bw.walk, bw.bound
            algorithm = bw.theorem
        elif args.method == "chromatic":
            colouring = greedy_vertex_colouring(g)
            bw = chromatic_irregularise(g, guiding_closed_walk(g), colouring)
            status, value, witness, bound = "finite", bw.walk.length, bw.walk, bw.bound
            algorithm = bw.theorem
        elif args.method == "labelling":
            bw = labelling_irregularise(g, _solve_labelling(g))
            status, value, witness, bound = "finite", bw.walk.length, bw.walk, bw.bound
            algorithm = bw.theorem
        elif args.method == "tree":
            try:
                res = tree_mlw(RootedTree(g, 0))
            except NotATree as exc:
                raise MethodInapplicable(f"tree: {exc}")
            status, value, witness = res.status, res.value, res.witness
            algorithm = "tree dynamic programming"
        else:
            algorithm, value, witness = _solve_closed_form(g)
            status = "finite"
    except NotNice as exc:
        raise MethodInapplicable(f"{args.method}: {exc}")
    wall_ms = (time.perf_counter() - t0) * 1000
    report = RunReport(desc, algorithm, status, value, witness, bound,
                       wall_ms, args.seed)
    return _emit_report(report, g, args.json)


# ───────────────────────── verify / normalize / export ─────────────────────────


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    w = _load_walk(args.walk)
    report = check_irregularising(g, w)
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "ok": report.ok,
            "conflicts": [list(e) for e in report.conflicts],
        }, sort_keys=True))
    elif report.ok:
        print(f"irregularising: walk of length {w.length} works")
    else:
        for u, v in report.conflicts:
            print(f"conflict: {u} {v} share their degree")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_normalize(args) -> int:
    g = _load_graph(args.graph)
    w = _load_walk(args.walk)
    nf = normalize_walk(g, w)
    expanded = expand_normal_form(nf)
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "base": list(nf.base.vertices),
            "half_turns": list(nf.half_turns),
            "walk": list(expanded.vertices),
            "e_odd": sorted(list(e) for e in nf.e_odd),
            "e_even": sorted(list(e) for e in nf.e_even),
        }, sort_keys=True))
    else:
        print(f"base:       {format_walk(nf.base).strip()}")
        print(f"half turns: {' '.join(map(str, nf.half_turns))}")
        print(f"normalized: {format_walk(expanded).strip()}")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    w = _load_walk(args.walk) if args.walk else Walk(())
    if not w.is_empty():
        check_irregularising(g, w)  # rejects walks that stray off the graph
    lines = ["digraph irregwalk {", "  node [shape=circle];"]
    for u, v in g.edges():
        lines.append(f"  {u} -> {v} [dir=none, style=solid];")
    for i in range(w.length):
        a, b = w.vertices[i], w.vertices[i + 1]
        lines.append(f'  {a} -> {b} [label="{i + 1}", style=dashed, '
                     f"constraint=false];")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_gadget(args) -> int:
    h = _load_graph(args.graph)
    inst = build_walk_gadget(h) if args.kind == "walk" else build_path_gadget(h)
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "kind": args.kind,
            "k": inst.k,
            "side": list(inst.side),
            "n": inst.g.n,
            "edges": [list(e) for e in inst.g.edges()],
        }, sort_keys=True))
    else:
        print(f"# {args.kind} gadget: n = {inst.g.n}"
              + (f", budget k = {inst.k}" if inst.k is not None else ""))
        print(f"# side: {' '.join(inst.side)}")
        print(format_edge_list(inst.g), end="")
    return EXIT_OK


# ───────────────────────── bench ─────────────────────────

_FAMILIES = ("path", "cycle", "complete", "complete-bipartite", "random-tree",
             "gnp", "subdivided-star", "cubic-bipartite")

# exact column: trees always (DP), anything else only at desk scale
_EXACT_EDGE_CAP = 12


def _parse_sizes(text: str) -> Tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ParseError(f"size range must be 'a' or 'a..b', got {text!r}")
    if lo > hi:
        raise ParseError(f"empty size range {text!r}")
    return lo, hi


def _bench_instances(family: str, lo: int, hi: int, samples: int, seed: int):
    """(description, graph) pairs in deterministic index order."""
    import random

    out = []
    if family == "subdivided-star":
        for k in range(lo, hi + 1):
            for length in range(lo, hi + 1):
                out.append((f"subdivided-star(k={k},l={length})",
                            subdivided_star(k, length)))
    elif family in ("path", "cycle", "complete", "complete-bipartite"):
        fixed = {
            "path": path_graph,
            "cycle": cycle_graph,
            "complete": complete_graph,
            "complete-bipartite": lambda s: complete_bipartite(s, s),
        }[family]
        for s in range(lo, hi + 1):
            out.append((f"{family}({s})", fixed(s)))
    else:
        for s in range(lo, hi + 1):
            for j in range(samples):
                rng = random.Random(f"{seed}:{s}:{j}")
                if family == "random-tree":
                    g = random_tree(s, rng)
                elif family == "gnp":
                    g = random_connected_gnp(s, 0.4, rng)
                else:
                    g = random_cubic_bipartite(s, rng)
                out.append((f"{family}(n={s},sample={j})", g))
    return out


def _bench_row(index: int, desc: str, g: Graph, budget: Optional[int]) -> Dict:
    guide = guiding_closed_walk(g)
    greedy = greedy_irregularise(g, guide)
    chrom = chromatic_irregularise(g, guide, greedy_vertex_colouring(g))
    exact_value: Optional[int] = None
    if g.m == g.n - 1 and is_connected(g):
        exact_value = tree_mlw(RootedTree(g, 0)).value
    elif g.m <= _EXACT_EDGE_CAP:
        res = exact_mlw(g, budget=budget)
        if res.is_finite:
            exact_value = res.value
    flags = []
    if exact_value is not None and exact_value > 3 * g.m:
        flags.append("counterexample: exact > 3m")
    if greedy.walk.length > 4 * g.m:
        flags.append("bug: greedy > 4m")
    return {
        "index": index,
        "instance": desc,
        "n": g.n,
        "m": g.m,
        "greedy": greedy.walk.length,
        "greedy_bound": greedy.bound,
        "greedy_ratio": round(greedy.walk.length / g.m, 4),
        "chromatic": chrom.walk.length,
        "exact": exact_value,
        "exact_ratio": None if exact_value is None else round(exact_value / g.m, 4),
        "flags": flags,
    }


def _bench_payload(payload):
    index, desc, edges, n, budget = payload
    return _bench_row(index, desc, build_graph(list(edges), n), budget)


def cmd_bench(args) -> int:
    lo, hi = _parse_sizes(args.sizes)
    if args.family not in _FAMILIES:
        raise ParseError(f"unknown family {args.family!r}; choose from {_FAMILIES}")
    instances = _bench_instances(args.family, lo, hi, args.samples, args.seed)
    workers = int(os.environ.get("IRREGWALK_WORKERS", "1"))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        payloads = [(i, desc, tuple(g.edges()), g.n, args.budget)
                    for i, (desc, g) in enumerate(instances)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_payload, payloads))
    else:
        rows = [_bench_row(i, desc, g, args.budget)
                for i, (desc, g) in enumerate(instances)]

    ratios = [r["exact_ratio"] for r in rows if r["exact_ratio"] is not None]
    max_ratio = max(ratios) if ratios else None
    findings = [f"{r['instance']}: {flag}" for r in rows for flag in r["flags"]]
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "family": args.family,
            "sizes": [lo, hi],
            "samples": args.samples,
            "seed": args.seed,
            "rows": rows,
            "max_exact_ratio": max_ratio,
            "findings": findings,
        }, sort_keys=True))
        return EXIT_OK
    header = (f"{'instance':<30} {'n':>4} {'m':>4} {'greedy':>6} {'bound':>6} "
              f"{'chrom':>6} {'exact':>6} {'ex/m':>6} {'flags'}")
    print(header)
    for r in rows:
        exact = "-" if r["exact"] is None else str(r["exact"])
        ratio = "-" if r["exact_ratio"] is None else f"{r['exact_ratio']:.3f}"
        print(f"{r['instance']:<30} {r['n']:>4} {r['m']:>4} {r['greedy']:>6} "
              f"{r['greedy_bound']:>6} {r['chromatic']:>6} {exact:>6} {ratio:>6} "
              f"{';'.join(r['flags'])}")
    if max_ratio is not None:
        print(f"max exact ratio: {max_ratio:.4f}")
    for line in findings:
        print(f"FINDING: {line}")
    return EXIT_OK


# ───────────────────────── argument parsing ─────────────────────────


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irregwalk",
        description="Verify, construct, and exactly compute irregularising walks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check whether a walk irregularises a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--walk", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="compute an irregularising walk")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="benchmark bounds over a graph family")
    p.add_argument("family", choices=_FAMILIES)
    p.add_argument("sizes", help="size or inclusive range, e.g. 6 or 2..5")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-dot", help="DOT drawing with numbered walk arcs")
    p.add_argument("--graph", required=True)
    p.add_argument("--walk", default=None)
    p.add_argument("--dot", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("gadget", help="build a hardness-reduction gadget")
    p.add_argument("kind", choices=("walk", "path"))
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("normalize", help="normal form of a walk on a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--walk", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_normalize)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, InvalidWalk, MethodInapplicable, IrregwalkError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
