"""The two gadgets of the reduction and their machine-checked properties.

The 4-terminal vertex gadget (labels ``a``..``i``) and the 1-terminal gadget
that replaces degree-2 vertices are given as explicit edge lists. Nothing
downstream trusts those lists directly: the leaf bounds are certified by
enumerating every spanning tree of a small harness graph, and the per-out-degree
tree patterns are checked against an exhaustive search over edge subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import CertificationFailed, NoPatternExists
from .graph import Graph, components, is_connected
from .oracles import OracleBudget, iter_tree_edge_sets

LABELS = "abcdefghi"
LabelEdge = tuple[str, str]


def _ledge(a: str, b: str) -> LabelEdge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class VertexGadget:
    labels: tuple[str, ...]
    edges: frozenset[LabelEdge]
    terminals: tuple[str, ...]
    degree2_vertex: str

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def neighbors(self, label: str) -> set[str]:
        return {b if a == label else a for a, b in self.edges if label in (a, b)}

    def internal_degree(self, label: str) -> int:
        return len(self.neighbors(label))

    @property
    def sorted_edges(self) -> tuple[LabelEdge, ...]:
        return tuple(sorted(self.edges))

    def host_degree(self, label: str) -> int:
        return self.internal_degree(label) + (label in self.terminals)


def vertex_gadget() -> VertexGadget:
    adjacency = {
        "a": "bde", "b": "ac", "c": "bf", "d": "aeg", "e": "adf",
        "f": "cei", "g": "dh", "h": "gi", "i": "fh",
    }
    edges = frozenset(_ledge(u, v) for u, vs in adjacency.items() for v in vs)
    return VertexGadget(tuple(LABELS), edges, ("b", "g", "h", "i"), "c")


# cuts named in the leaf-bound arguments; each must separate the gadget-plus-pendants graph
PROOF_CUTS = (
    ("a", "d", "f"), ("b", "g", "i"), ("a", "e", "g"),
    ("b", "e", "i"), ("b", "f"), ("b", "d", "e"),
)
PROOF_PATHS = (("b", "c", "f", "i"), ("g", "h", "i"))


def _pendant_graph(gadget: VertexGadget) -> tuple[Graph, dict[str, int]]:
    """Gadget plus one pendant vertex per terminal, all pendants joined to a hub."""
    idx = {lab: k for k, lab in enumerate(gadget.labels)}
    n = len(gadget.labels)
    edges = [(idx[a], idx[b]) for a, b in gadget.edges]
    hub = n + len(gadget.terminals)
    for k, t in enumerate(gadget.terminals):
        edges.append((idx[t], n + k))
        edges.append((n + k, hub))
    return Graph.from_edges(hub + 1, edges), idx


def check_structure(gadget: VertexGadget) -> list[tuple[str, bool]]:
    """Every structural invariant the proofs rely on, as (name, holds) pairs."""
    checks: list[tuple[str, bool]] = []
    checks.append(("9 vertices", len(gadget.labels) == 9))
    checks.append(("11 internal edges", len(gadget.edges) == 11))
    deg2 = [lab for lab in gadget.labels if gadget.internal_degree(lab) == 2 and lab not in gadget.terminals]
    checks.append(("unique non-terminal of internal degree 2", deg2 == [gadget.degree2_vertex]))
    checks.append(("terminals have internal degree 2",
                   all(gadget.internal_degree(t) == 2 for t in gadget.terminals)))
    checks.append(("other vertices have internal degree 3", all(
        gadget.internal_degree(lab) == 3
        for lab in gadget.labels
        if lab not in gadget.terminals and lab != gadget.degree2_vertex
    )))
    host, idx = _pendant_graph(gadget)
    for cut in PROOF_CUTS:
        removed = {idx[c] for c in cut}
        keep = [v for v in range(host.n) if v not in removed]
        remap = {v: k for k, v in enumerate(keep)}
        sub = [(remap[u], remap[v]) for u, v in host.edges if u in remap and v in remap]
        checks.append((f"cut {{{','.join(cut)}}}", not is_connected(len(keep), sub)))
    for p in PROOF_PATHS:
        checks.append((f"path {'-'.join(p)}", all(_ledge(x, y) in gadget.edges for x, y in zip(p, p[1:]))))
    return checks


# --------------------------------------------------------------------------
# leaf bounds by exhaustive enumeration


def _dfs_intervals(n: int, tree_edges, root: int) -> tuple[list[int], list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    tin = [-1] * n
    tout = [-1] * n
    clock = 0
    tin[root] = clock
    stack = [(root, iter(adj[root]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if tin[w] < 0:
                clock += 1
                tin[w] = clock
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
            tout[u] = clock
    return tin, tout


@dataclass(frozen=True)
class Harness:
    graph: Graph
    gadget_ids: dict[str, int]
    external: tuple[int, ...]
    terminal_edges: tuple[tuple[int, int], ...]  # (terminal id, pendant id)


def harness(gadget: VertexGadget, cycle_length: int = 5) -> Harness:
    """Gadget whose terminals reach a shared external cycle through subdivision vertices.

    Terminal k is joined to a fresh vertex w_k, which is joined to cycle vertex
    x_k. Any combination of entering, leaving and unused terminal edges can be
    realised, with the root anywhere outside the gadget.
    """
    if cycle_length < len(gadget.terminals):
        raise ValueError("cycle must have a vertex for every terminal")
    idx = {lab: k for k, lab in enumerate(gadget.labels)}
    n = len(gadget.labels)
    xs = list(range(n, n + cycle_length))
    ws = list(range(n + cycle_length, n + cycle_length + len(gadget.terminals)))
    edges = [(idx[a], idx[b]) for a, b in gadget.edges]
    edges += [(xs[k], xs[(k + 1) % cycle_length]) for k in range(cycle_length)]
    tedges = []
    for k, t in enumerate(gadget.terminals):
        edges += [(idx[t], ws[k]), (ws[k], xs[k])]
        tedges.append((idx[t], ws[k]))
    g = Graph.from_edges(n + cycle_length + len(ws), edges)
    return Harness(g, idx, tuple(xs + ws), tuple(tedges))


@dataclass
class BoundsReport:
    trees: int
    # out-arc count (exact) -> max weighted leaves inside the gadget
    max_by_out: dict[int, int]
    witnesses: dict[int, tuple] = field(default_factory=dict)

    def max_at_least(self, k: int) -> int:
        vals = [v for out, v in self.max_by_out.items() if out >= k]
        return max(vals) if vals else -1

    @property
    def max_zero(self) -> int:
        return self.max_by_out.get(0, -1)

    def lines(self) -> list[str]:
        return [
            f"spanning trees enumerated: {self.trees}",
            f"0 arcs leaving: max {self.max_zero}",
            f">=1 arcs leaving: max {self.max_at_least(1)}",
            f">=2 arcs leaving: max {self.max_at_least(2)}",
        ] + [f"exactly {k} arcs leaving: max {v}" for k, v in sorted(self.max_by_out.items())]


EXPECTED_BOUNDS = {0: 6, 1: 4, 2: 3}


def verify_gadget_bounds(gadget: VertexGadget | None = None,
                         budget: OracleBudget | None = None) -> BoundsReport:
    """Max weighted leaves inside the gadget, split by arcs leaving it, over all trees and roots."""
    gadget = gadget or vertex_gadget()
    h = harness(gadget)
    g = h.graph
    weighted = [h.gadget_ids[lab] for lab in gadget.labels if g.degree(h.gadget_ids[lab]) == 3]
    external = h.external
    best: dict[int, int] = {}
    witnesses: dict[int, tuple] = {}
    trees = 0
    budget = budget or OracleBudget(max_vertices=64, max_trees_enumerated=10_000_000, time_limit=600)
    for es in iter_tree_edge_sets(g, budget):
        trees += 1
        deg = [0] * g.n
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        leaves = sum(1 for v in weighted if deg[v] == 1)
        tin, tout = _dfs_intervals(g.n, es, external[0])

        def below(x, top):
            return tin[top] <= tin[x] and tout[x] <= tout[top]

        esset = set(es)
        used = [(t, w) for t, w in h.terminal_edges if (t, w) in esset]
        seen_outs = set()
        for r in external:
            # arc (t, w) leaves the gadget iff the root is on t's side of the tree edge
            out = 0
            for t, w in used:
                if tin[w] > tin[t]:  # w is the child
                    out += not below(r, w)
                else:
                    out += below(r, t)
            if out in seen_outs:
                continue
            seen_outs.add(out)
            if leaves > best.get(out, -1):
                best[out] = leaves
                witnesses[out] = (tuple(sorted(es)), r)
    report = BoundsReport(trees, dict(sorted(best.items())), witnesses)
    for k, expected in EXPECTED_BOUNDS.items():
        got = report.max_zero if k == 0 else report.max_at_least(k)
        if got != expected:
            witness = witnesses.get(k)
            raise CertificationFailed(
                f"gadget max weighted leaves with {'>=' if k else ''}{k} leaving arcs is {got}, expected {expected}",
                witness,
            )
    return report


# --------------------------------------------------------------------------
# tree patterns keyed by out-degree and out-terminals

PatternKey = tuple[int, frozenset[str]]
EXPECTED_YIELD = {0: 6, 1: 4, 3: 3}


@dataclass(frozen=True)
class GadgetTreePattern:
    key: PatternKey
    edges: frozenset[LabelEdge]
    leaves: tuple[str, ...]

    @property
    def out_degree(self) -> int:
        return self.key[0]

    @property
    def leaf_yield(self) -> int:
        return len(self.leaves)


def pattern_keys(gadget: VertexGadget) -> list[PatternKey]:
    ts = gadget.terminals
    keys: list[PatternKey] = [(0, frozenset())]
    keys += [(1, frozenset({t})) for t in ts]
    keys += [(3, frozenset(set(ts) - {t})) for t in ts]
    return keys


def evaluate_pattern(gadget: VertexGadget, edges: Iterable[LabelEdge],
                     key: PatternKey) -> tuple[str, ...] | None:
    """Weighted leaves the pattern yields, or None if it breaks a pattern contract.

    Terminal edges leaving the gadget are always in the tree, so a terminal is
    a leaf exactly when the pattern leaves it isolated.
    """
    out_degree, outs = key
    ins = [t for t in gadget.terminals if t not in outs]
    idx = {lab: k for k, lab in enumerate(gadget.labels)}
    elist = [(idx[a], idx[b]) for a, b in edges]
    comps = components(len(gadget.labels), elist)
    if len(elist) != len(gadget.labels) - len(comps):
        return None  # cycle
    in_ids = {idx[t] for t in ins}
    if any(not (set(c) & in_ids) for c in comps):
        return None
    if out_degree == 3 and len(comps) != 1:
        return None
    deg = {lab: 0 for lab in gadget.labels}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    leaves = []
    for lab in gadget.labels:
        if lab == gadget.degree2_vertex:
            continue
        tree_degree = deg[lab] + (lab in gadget.terminals)
        if tree_degree == 1:
            leaves.append(lab)
    return tuple(leaves)


def _candidates() -> dict[int, list[frozenset[LabelEdge]]]:
    def es(*pairs):
        return frozenset(_ledge(*p) for p in pairs)

    return {
        0: [es("bc", "cf", "ab", "ad", "ae")],
        1: [es("bc", "cf", "fi", "ab", "ad", "ef")],
        3: [es("bc", "cf", "fi", "ih", "hg", "ab", "dg", "ef")],
    }


def search_patterns(gadget: VertexGadget, key: PatternKey) -> tuple[int, frozenset[LabelEdge] | None]:
    """Best leaf yield over all 2^|E| edge subsets (first one in mask order wins ties)."""
    edges = gadget.sorted_edges
    best, arg = -1, None
    for mask in range(1 << len(edges)):
        sub = [edges[j] for j in range(len(edges)) if mask >> j & 1]
        leaves = evaluate_pattern(gadget, sub, key)
        if leaves is not None and len(leaves) > best:
            best, arg = len(leaves), frozenset(sub)
    return best, arg


def synthesize_patterns(gadget: VertexGadget | None = None) -> dict[PatternKey, GadgetTreePattern]:
    gadget = gadget or vertex_gadget()
    cands = _candidates() if gadget == vertex_gadget() else {}
    out: dict[PatternKey, GadgetTreePattern] = {}
    for key in pattern_keys(gadget):
        expected = EXPECTED_YIELD[key[0]]
        chosen = None
        for cand in cands.get(key[0], []):
            leaves = evaluate_pattern(gadget, cand, key)
            if leaves is not None and len(leaves) >= expected:
                chosen = cand
                break
        if chosen is None:
            best, arg = search_patterns(gadget, key)
            if best < expected:
                raise NoPatternExists(f"key {key}: best yield {best} < {expected}")
            chosen = arg
        out[key] = GadgetTreePattern(key, chosen, evaluate_pattern(gadget, chosen, key))
    return out


@lru_cache(maxsize=1)
def default_patterns() -> dict[PatternKey, GadgetTreePattern]:
    return synthesize_patterns(vertex_gadget())


@dataclass
class PatternReport:
    rows: list[tuple[PatternKey, int, int, bool]]  # key, pattern yield, search optimum, valid

    @property
    def passed(self) -> bool:
        return all(valid and y == EXPECTED_YIELD[k[0]] == opt for k, y, opt, valid in self.rows)

    def lines(self) -> list[str]:
        out = []
        for (d, outs), y, opt, valid in self.rows:
            tag = ",".join(sorted(outs)) or "-"
            out.append(f"out-degree {d} out={tag}: yield {y}, search optimum {opt}, "
                       f"{'valid' if valid else 'INVALID'}")
        return out


def certify_patterns(gadget: VertexGadget | None = None,
                     patterns: dict[PatternKey, GadgetTreePattern] | None = None) -> PatternReport:
    gadget = gadget or vertex_gadget()
    patterns = patterns if patterns is not None else synthesize_patterns(gadget)
    rows = []
    for key in pattern_keys(gadget):
        p = patterns[key]
        leaves = evaluate_pattern(gadget, p.edges, key)
        opt, _ = search_patterns(gadget, key)
        rows.append((key, len(leaves) if leaves else -1, opt, leaves is not None))
    report = PatternReport(rows)
    if not report.passed:
        raise CertificationFailed("pattern certification failed", report)
    return report


# --------------------------------------------------------------------------
# degree-2 replacement gadget


@dataclass(frozen=True)
class DegreeTwoGadget:
    """Terminal ``t`` (one internal edge, two external) on top of five cubic vertices."""

    labels: tuple[str, ...]
    edges: frozenset[LabelEdge]
    terminal: str
    canonical_tree: frozenset[LabelEdge]

    @property
    def internal(self) -> tuple[str, ...]:
        return tuple(lab for lab in self.labels if lab != self.terminal)


def degree2_gadget() -> DegreeTwoGadget:
    edges = frozenset(_ledge(a, b) for a, b in
                      ["tq", "qs", "qu", "sx", "sy", "ux", "uy", "xy"])
    tree = frozenset(_ledge(a, b) for a, b in ["tq", "qs", "qu", "sx", "sy"])
    return DegreeTwoGadget(("t", "q", "s", "u", "x", "y"), edges, "t", tree)


@dataclass
class DegreeTwoReport:
    trees: int
    max_internal: int
    # which external edges of t are in the tree -> best internal leaf count
    by_usage: dict[str, int]
    terminal_ever_leaf: bool

    def lines(self) -> list[str]:
        return [f"spanning trees enumerated: {self.trees}",
                f"max internal leaves: {self.max_internal}",
                f"terminal ever a leaf: {'yes' if self.terminal_ever_leaf else 'no'}"] + [
            f"terminal uses {k}: best {v}" for k, v in sorted(self.by_usage.items())]


def certify_degree2_gadget(gadget: DegreeTwoGadget | None = None) -> DegreeTwoReport:
    """Enumerate trees of the gadget with its terminal on a 4-cycle ``t-p1-z-p2-t``."""
    gadget = gadget or degree2_gadget()
    idx = {lab: k for k, lab in enumerate(gadget.labels)}
    k = len(gadget.labels)
    t = idx[gadget.terminal]
    p1, z, p2 = k, k + 1, k + 2
    edges = [(idx[a], idx[b]) for a, b in gadget.edges] + [(t, p1), (p1, z), (z, p2), (p2, t)]
    g = Graph.from_edges(k + 3, edges)
    if any(g.degree(idx[lab]) != 3 for lab in gadget.labels):
        raise CertificationFailed("degree-2 gadget is not cubic once attached")
    internal = [idx[lab] for lab in gadget.internal]
    by_usage: dict[str, int] = {}
    trees = 0
    best = -1
    t_leaf = False
    for es in iter_tree_edge_sets(g):
        trees += 1
        deg = [0] * g.n
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        leaves = sum(1 for v in internal if deg[v] == 1)
        t_leaf |= deg[t] == 1
        used = tuple(name for name, e in (("left", (t, p1)), ("right", (t, p2))) if e in es)
        key = "+".join(used)
        by_usage[key] = max(by_usage.get(key, -1), leaves)
        best = max(best, leaves)
    report = DegreeTwoReport(trees, best, by_usage, t_leaf)
    if best != 3 or t_leaf or set(by_usage) != {"left", "right", "left+right"} \
            or any(v != 3 for v in by_usage.values()):
        raise CertificationFailed("degree-2 gadget certification failed", report)
    canon = evaluate_degree2_canonical(gadget)
    if canon != 3:
        raise CertificationFailed(f"canonical tree yields {canon} internal leaves, expected 3")
    return report


def evaluate_degree2_canonical(gadget: DegreeTwoGadget) -> int:
    deg = {lab: 0 for lab in gadget.labels}
    for a, b in gadget.canonical_tree:
        deg[a] += 1
        deg[b] += 1
    return sum(1 for lab in gadget.internal if deg[lab] == 1)
