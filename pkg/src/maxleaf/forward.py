"""From an independent set of the base graph to a leafy spanning tree of the instance."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .coloring import Color, OrderedColoring
from .errors import (
    InconsistentOrientation,
    InternalInvariantViolation,
    NotIndependent,
    NotMaximal,
)
from .gadgets import LABELS, default_patterns
from .graph import Graph, Orientation, SpanningTree, break_cycles, edge, is_connected, is_independent
from .instance import WeightedInstance


def lower_bound(n: int, x: int) -> int:
    """floor(3.75 n + 1.5 x), computed exactly."""
    return (15 * n + 6 * x) // 4


def maximalize_independent_set(g: Graph, i: Iterable[int]) -> frozenset[int]:
    chosen = set(i)
    if not is_independent(g, chosen):
        raise NotIndependent("input set is not independent")
    for v in range(g.n):
        if v not in chosen and not any(w in chosen for w in g.adjacency[v]):
            chosen.add(v)
    return frozenset(chosen)


def is_maximal_independent(g: Graph, i: Iterable[int]) -> bool:
    s = set(i)
    return is_independent(g, s) and all(
        v in s or any(w in s for w in g.adjacency[v]) for v in range(g.n)
    )


def orient_base_graph(g: Graph, oc: OrderedColoring, i: Iterable[int]) -> Orientation:
    """Edges into the independent set point at it; all others go red -> green -> blue."""
    s = set(i)
    if not is_independent(g, s):
        raise NotIndependent("set is not independent")
    if not is_maximal_independent(g, s):
        raise NotMaximal("set is not maximal")
    arcs = []
    for u, v in g.sorted_edges:
        if v in s:
            arcs.append((u, v))
        elif u in s:
            arcs.append((v, u))
        else:
            cu, cv = oc.color_of_new(u), oc.color_of_new(v)
            if cu == cv:
                raise InconsistentOrientation(f"edge {(u, v)} is monochromatic")
            arcs.append((u, v) if cu < cv else (v, u))
    return Orientation(g, frozenset(arcs))


@dataclass(frozen=True)
class CycleOrientationData:
    members: frozenset[int]  # indices i with an incoming spoke arc (v_i, c_i)
    green_members: int
    root: int  # connection index of the chosen root

    @property
    def parity(self) -> int:
        return self.green_members % 2


def choose_root(data: CycleOrientationData | int, r: int) -> int:
    """Connection index of the root: 0 for an even green count, r-1 otherwise.

    ``data`` may also be the green count itself.
    """
    if r < 1:
        raise ValueError("at least one red vertex is required")
    greens = data.green_members if isinstance(data, CycleOrientationData) else data
    return 0 if greens % 2 == 0 else r - 1


def orient_cycle(n: int, members: Iterable[int], green_members: int) -> list[tuple[int, int]]:
    """Arcs between connection indices for the cycle c_0 c_1 ... c_{n-1}.

    Edge c_i c_{i+1} points forward exactly when the number of members among
    indices 0..i has the parity of ``green_members``.
    """
    members = set(members)
    arcs = []
    count = 0
    for i in range(n):
        count += i in members
        j = (i + 1) % n
        arcs.append((i, j) if count % 2 == green_members % 2 else (j, i))
    return arcs


def extend_orientation(inst: WeightedInstance, og: Orientation) -> tuple[Orientation, CycleOrientationData]:
    base = inst.base
    if og.host != base:
        raise InconsistentOrientation("orientation is not over the instance base graph")
    n = inst.n
    aug = inst.augmented
    arcs = set(og.arcs)
    members = set()
    for i in range(n):
        if og.out_degree(i) == 2:
            arcs.add((i, n + i))
            members.add(i)
        else:
            arcs.add((n + i, i))
    greens = sum(1 for i in members if inst.color(i) == Color.GREEN)
    arcs.update((n + a, n + b) for a, b in orient_cycle(n, members, greens))
    orient = Orientation(aug.graph, frozenset(arcs))
    data = CycleOrientationData(frozenset(members), greens, choose_root(greens, inst.coloring.r))
    _check_orientation_claims(inst, og, orient, data)
    return orient, data


def _check_orientation_claims(inst, og, orient, data):
    n = inst.n
    if any(orient.out_degree(i) == 2 for i in range(n)):
        raise InternalInvariantViolation("a base vertex has out-degree 2 in the augmented orientation")
    if any(inst.color(i) == Color.RED for i in data.members):
        raise InternalInvariantViolation("a red base vertex feeds its connection vertex")
    n2 = sum(1 for i in range(n) if og.out_degree(i) == 2)
    sinks = sum(1 for i in range(n) if orient.out_degree(n + i) == 0)
    if sinks < n2 // 2:
        raise InternalInvariantViolation(f"only {sinks} sink connection vertices, need {n2 // 2}")
    if len(orient.reachable_from(n + data.root)) != 2 * n:
        raise InternalInvariantViolation("not every augmented vertex is reachable from the root")


@dataclass(frozen=True)
class ForwardResult:
    tree: SpanningTree
    independent_set: frozenset[int]  # the maximal set actually used (base ids)
    base_orientation: Orientation
    orientation: Orientation
    cycle: CycleOrientationData
    out_profile: dict[int, int]  # out-degree in the augmented graph -> count over base vertices
    base_profile: dict[int, int]  # out-degree in the base graph -> count
    leaves: int

    @property
    def structural_bound(self) -> int:
        p, q = self.out_profile, self.base_profile
        return 6 * p.get(0, 0) + 4 * p.get(1, 0) + 3 * p.get(3, 0) + q.get(2, 0) // 2


def synthesize_tree(inst: WeightedInstance, i: Iterable[int]) -> ForwardResult:
    """Run the whole construction and keep every intermediate object."""
    n = inst.n
    base = inst.base
    chosen = set(i)
    if not is_independent(base, chosen):
        raise NotIndependent("set is not independent in the base graph")
    requested = len(chosen)
    mis = maximalize_independent_set(base, chosen)
    og = orient_base_graph(base, inst.coloring, mis)
    orient, cycle = extend_orientation(inst, og)

    patterns = default_patterns()
    edges = set()
    for v in range(n):
        outs = orient.out_neighbors[v]
        key = (len(outs), frozenset(inst.terminal_for[(v, u)] for u in outs))
        for a, b in patterns[key].edges:
            edges.add(edge(9 * v + LABELS.index(a), 9 * v + LABELS.index(b)))
    first_sub = 10 * n
    edges.update(e for e in inst.graph.edges if e[1] >= first_sub)
    for k in range(n):
        if orient.in_degree(n + k) == 3:
            c = inst.connection(k)
            for j in ((k - 1) % n, (k + 1) % n):
                s = inst.subdivision[edge(n + k, n + j)]
                edges.discard(edge(c, s))
    if not is_connected(inst.graph.n, edges):
        raise InternalInvariantViolation("the connected subgraph built from the orientation is disconnected")
    tree = break_cycles(inst.graph, edges)

    result = ForwardResult(
        tree=tree,
        independent_set=mis,
        base_orientation=og,
        orientation=orient,
        cycle=cycle,
        out_profile=dict(Counter(orient.out_degree(v) for v in range(n))),
        base_profile=dict(Counter(og.out_degree(v) for v in range(n))),
        leaves=len(tree.weighted_leaves()),
    )
    if result.leaves < result.structural_bound:
        raise InternalInvariantViolation(
            f"{result.leaves} weighted leaves < structural bound {result.structural_bound}")
    if result.leaves < lower_bound(n, requested):
        raise InternalInvariantViolation(
            f"{result.leaves} weighted leaves < floor bound {lower_bound(n, requested)}")
    return result


def tree_from_independent_set(inst: WeightedInstance, i: Iterable[int]) -> SpanningTree:
    """Spanning tree with at least floor(3.75 n + 1.5 |i|) weighted leaves."""
    return synthesize_tree(inst, i).tree
