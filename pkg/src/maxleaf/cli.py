"""Command-line front end.

Exit codes: 0 on success, 1 when a named contract or certification check fails,
2 on usage, file or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import generators
from .backward import guaranteed_size, set_from_tree, upper_bound
from .companions import TRANSFERS, cds_from_tree
from .errors import (
    CertificationFailed,
    EpsilonOutOfRange,
    GraphFormatError,
    MaxLeafError,
    UnsatisfiableParameters,
)
from .forward import lower_bound, synthesize_tree
from .gadgets import (
    certify_degree2_gadget,
    certify_patterns,
    check_structure,
    verify_gadget_bounds,
    vertex_gadget,
)
from .graph import Graph, SpanningTree
from .graphio import GraphFile, parse_vertex_list, read_graph_file, serialize, write_graph_file
from .instance import audit_instance, build_from_cubic, expand_degree_two
from .oracles import (
    OracleBudget,
    max_independent_set,
    max_leaf_spanning_tree,
    max_weighted_leaf_tree,
    min_connected_dominating_set,
    min_vertex_cover,
)


class UsageError(Exception):
    pass


def _emit(lines):
    sys.stdout.write("\n".join(lines) + "\n")


def _read(args) -> GraphFile:
    if not args.input:
        raise UsageError("--in is required")
    return read_graph_file(args.input)


def _write_graph(gf: GraphFile, path):
    if path:
        write_graph_file(path, gf)
    else:
        sys.stdout.write(serialize(gf))


def _budget(args) -> OracleBudget:
    return OracleBudget(args.budget_vertices, args.budget_trees, args.budget_seconds)


def cmd_gen(args) -> int:
    g = generators.generate(args.model, args.n, args.seed)
    _write_graph(GraphFile.from_graph(g), args.out)
    return 0


def cmd_reduce(args) -> int:
    g = _read(args).graph
    inst = build_from_cubic(g)
    audit = audit_instance(inst)
    roles = {v: r.token() for v, r in enumerate(inst.roles)}
    if args.out:
        write_graph_file(args.out, GraphFile.from_graph(inst.graph, roles))
    _emit(audit.lines())
    return 0 if audit.passed else 1


def cmd_expand(args) -> int:
    g = _read(args).graph
    m = expand_degree_two(g)
    if args.out:
        write_graph_file(args.out, GraphFile.from_graph(m.cubic))
    _emit([f"source vertices: {g.n}", f"degree-2 vertices replaced: {m.x}",
           f"vertices: {m.cubic.n}", f"cubic: {m.cubic.is_cubic()}"])
    return 0


def cmd_forward(args) -> int:
    g = _read(args).graph
    chosen = parse_vertex_list(args.independent_set or "")
    inst = build_from_cubic(g)
    result = synthesize_tree(inst, inst.to_base(chosen))
    bound = lower_bound(g.n, len(chosen))
    if args.out:
        write_graph_file(args.out, GraphFile.from_graph(Graph(inst.graph.n, result.tree.tree_edges)))
    _emit([f"instance vertices: {inst.graph.n}",
           f"maximal set size: {len(result.independent_set)}",
           f"weighted leaves: {result.leaves}",
           f"lower bound floor(3.75n + 1.5x): {bound}",
           f"forward bound: {'PASS' if result.leaves >= bound else 'FAIL'}"])
    return 0 if result.leaves >= bound else 1


def cmd_backward(args) -> int:
    g = _read(args).graph
    if not args.tree:
        raise UsageError("--tree is required")
    tf = read_graph_file(args.tree)
    inst = build_from_cubic(g)
    if tf.n != inst.graph.n:
        raise UsageError(f"tree file has {tf.n} vertices, instance has {inst.graph.n}")
    t = SpanningTree(inst.graph, frozenset(tf.edges))
    result = set_from_tree(inst, t, strict=False)
    found = sorted(inst.from_base(result.independent_set))
    leaves = result.audit.leaves
    lines = [f"independent set: {' '.join(map(str, found))}",
             f"guaranteed size from leaves: {guaranteed_size(g.n, leaves)}",
             f"upper bound ceil(3.75n + 1.5|I|): {upper_bound(g.n, len(found))}"]
    lines += result.audit.lines()
    _emit(lines)
    if not result.audit.passed:
        failed = next(name for name, ok in result.audit.checks if not ok)
        sys.stderr.write(f"audit failed: {failed}\n")
        return 1
    return 0


def cmd_oracle(args) -> int:
    g = _read(args).graph
    b = _budget(args)
    if args.problem == "mis":
        value, witness = max_independent_set(g, b)
    elif args.problem == "vc":
        value, witness = min_vertex_cover(g, b)
    elif args.problem == "cds":
        value, witness = min_connected_dominating_set(g, b)
    else:
        solver = max_leaf_spanning_tree if args.problem == "maxleaf" else max_weighted_leaf_tree
        value, tree = solver(g, b)
        if args.out:
            write_graph_file(args.out, GraphFile.from_graph(Graph(g.n, tree.tree_edges)))
        leaves = tree.leaves() if args.problem == "maxleaf" else tree.weighted_leaves()
        lines = [f"{args.problem}: {value}", f"leaves: {' '.join(map(str, leaves))}"]
        if args.problem == "maxleaf" and g.n >= 3:
            lines.append(f"non-leaves: {' '.join(map(str, sorted(cds_from_tree(g, tree))))}")
        _emit(lines)
        return 0
    _emit([f"{args.problem}: {value}", f"witness: {' '.join(map(str, sorted(witness)))}"])
    return 0


def cmd_verify_gadgets(args) -> int:
    ok = True
    lines = []
    structure = check_structure(vertex_gadget())
    s_ok = all(v for _, v in structure)
    lines.append(f"gadget structure: {'PASS' if s_ok else 'FAIL'}")
    ok &= s_ok
    try:
        bounds = verify_gadget_bounds(budget=_budget(args))
        lines += bounds.lines()
        lines.append("gadget bounds: max leaves 6/4/3 PASS")
    except CertificationFailed as exc:
        lines.append(f"gadget bounds: FAIL ({exc})")
        ok = False
    try:
        patterns = certify_patterns()
        lines += patterns.lines()
        lines.append("tree patterns: PASS")
    except CertificationFailed as exc:
        lines.append(f"tree patterns: FAIL ({exc})")
        ok = False
    d2 = certify_degree2_gadget()
    lines += d2.lines()
    _emit(lines)
    return 0 if ok else 1


def cmd_transfer(args) -> int:
    if args.epsilon is None:
        raise UsageError("--epsilon is required")
    t = TRANSFERS[args.problem](args.epsilon)
    _emit([t.line()])
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "reduce": cmd_reduce,
    "expand": cmd_expand,
    "forward": cmd_forward,
    "backward": cmd_backward,
    "oracle": cmd_oracle,
    "verify-gadgets": cmd_verify_gadgets,
    "transfer": cmd_transfer,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxleaf", description="Max-leaf reduction toolkit for cubic graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--in", dest="input", help="input graph file")
        p.add_argument("--out", help="output file (default: stdout for graph output)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget-vertices", type=int, default=64)
        p.add_argument("--budget-trees", type=int, default=5_000_000)
        p.add_argument("--budget-seconds", type=float, default=120.0)
        return p

    p = common(sub.add_parser("gen", help="generate a graph"), needs_input=False)
    p.add_argument("--model", choices=generators.MODELS, default="random-cubic")
    p.add_argument("--n", type=int)
    common(sub.add_parser("reduce", help="build the weighted instance of a cubic graph"))
    common(sub.add_parser("expand", help="replace degree-2 vertices by cubic gadgets"))
    p = common(sub.add_parser("forward", help="independent set -> spanning tree"))
    p.add_argument("--is", dest="independent_set", help="vertex list, e.g. 0,3,5")
    p = common(sub.add_parser("backward", help="spanning tree -> independent set with audit"))
    p.add_argument("--tree", help="tree file over the instance vertices")
    p = common(sub.add_parser("oracle", help="exact solver"))
    p.add_argument("problem", choices=["mis", "vc", "maxleaf", "wml", "cds"])
    common(sub.add_parser("verify-gadgets", help="exhaustive gadget certification"), needs_input=False)
    p = common(sub.add_parser("transfer", help="approximation ratio arithmetic"), needs_input=False)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--problem", choices=sorted(TRANSFERS), default="mis")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphFormatError, EpsilonOutOfRange, UnsatisfiableParameters, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except MaxLeafError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
