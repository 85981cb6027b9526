"""Companion reductions: vertex cover to max-leaf, the CDS duality, and the
approximation-ratio pipeline for cubic independent set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .backward import BackwardResult, set_from_tree, upper_bound
from .errors import (
    EpsilonOutOfRange,
    IsK2,
    NotCDS,
    NotCubic,
    NotSpanningTree,
    ProviderContractViolated,
)
from .forward import synthesize_tree
from .graph import (
    Graph,
    SpanningTree,
    bfs_tree,
    edge,
    is_connected_dominating_set,
    orient_out_tree,
)
from .instance import ExpansionMap, WeightedInstance, build_from_cubic, contract_tree, expand_degree_two, lift_tree
from .oracles import DEFAULT_BUDGET, OracleBudget, max_independent_set

# --------------------------------------------------------------------------
# vertex cover


@dataclass(frozen=True)
class VCReduction:
    """Apex vertex joined to everything, every original edge subdivided.

    Original vertices keep their ids, the apex is ``n`` and the k-th sorted
    edge of the source is subdivided by ``n + 1 + k``.
    """

    source: Graph
    graph: Graph
    subdivision: dict[tuple[int, int], int]

    @property
    def apex(self) -> int:
        return self.source.n

    def leaves_for_cover(self, y: int) -> int:
        return self.source.n - y + self.source.m

    def cover_for_leaves(self, leaves: int) -> int:
        return self.source.n + self.source.m - leaves


def vc_to_maxleaf(g: Graph) -> VCReduction:
    if not g.is_cubic():
        raise NotCubic("vertex cover reduction expects a cubic graph")
    n = g.n
    edges = [(v, n) for v in range(n)]
    sub = {}
    for k, (u, v) in enumerate(g.sorted_edges):
        s = n + 1 + k
        sub[(u, v)] = s
        edges += [(u, s), (v, s)]
    return VCReduction(g, Graph.from_edges(n + 1 + g.m, edges), sub)


def normalize_vc_tree(red: VCReduction, t: SpanningTree) -> SpanningTree:
    """Make every subdivision vertex a leaf without losing leaves.

    At a subdivision vertex s with both edges in the tree, take the one leading
    away from the apex, say sw, and swap it for the apex edge xw. Then s becomes
    a leaf, w keeps its degree, and only the apex can stop being a leaf.
    """
    if t.host != red.graph:
        raise NotSpanningTree("tree does not span the reduction graph")
    edges = set(t.tree_edges)
    x = red.apex
    for s in sorted(red.subdivision.values()):
        current = SpanningTree(red.graph, frozenset(edges))
        if current.degree(s) < 2:
            continue
        parent = orient_out_tree(current, x).parent
        (w,) = [w for w in current.adjacency[s] if w != parent[s]]
        edges.discard(edge(s, w))
        edges.add(edge(x, w))
    return SpanningTree(red.graph, frozenset(edges))


def extract_vc_from_tree(red: VCReduction, t: SpanningTree) -> frozenset[int]:
    """Non-leaf original vertices of the normalized tree; always a vertex cover."""
    norm = normalize_vc_tree(red, t)
    return frozenset(v for v in range(red.source.n) if norm.degree(v) >= 2)


# --------------------------------------------------------------------------
# connected dominating sets


def _check_not_k2(g: Graph):
    if g.n == 2 and g.m == 1:
        raise IsK2("K2 has no proper connected dominating set of non-leaves")


def cds_from_tree(g: Graph, t: SpanningTree) -> frozenset[int]:
    _check_not_k2(g)
    if t.host != g:
        raise NotSpanningTree("tree does not span the graph")
    return frozenset(v for v in range(g.n) if t.degree(v) >= 2)


def tree_from_cds(g: Graph, s) -> SpanningTree:
    """Spanning tree of the induced subgraph on ``s`` with every other vertex hung on as a leaf."""
    _check_not_k2(g)
    s = frozenset(s)
    if not is_connected_dominating_set(g, s):
        raise NotCDS("set is not a connected dominating set")
    inside = sorted(s)
    pos = {v: k for k, v in enumerate(inside)}
    induced = Graph.from_edges(len(inside), [(pos[u], pos[v]) for u, v in g.edges if u in s and v in s])
    edges = {edge(inside[a], inside[b]) for a, b in bfs_tree(induced).tree_edges}
    for v in range(g.n):
        if v not in s:
            edges.add(edge(v, min(w for w in g.adjacency[v] if w in s)))
    return SpanningTree(g, frozenset(edges))


# --------------------------------------------------------------------------
# ratio arithmetic


def _exact(eps) -> Fraction:
    if isinstance(eps, float):
        return Fraction(repr(eps))
    return Fraction(eps)


@dataclass(frozen=True)
class RatioTransfer:
    problem: str
    epsilon: Fraction
    gamma: Fraction | None
    ratio: Fraction

    def exact_recovery(self, x: int) -> bool:
        """True when gamma * x < 1/2, where the recovered set is optimal."""
        return self.gamma is not None and self.gamma * x < Fraction(1, 2)

    def guaranteed_size(self, x: int) -> Fraction:
        """Lower bound on the returned set size when the optimum is ``x``."""
        if self.exact_recovery(x):
            return Fraction(x)
        return self.ratio * x

    def line(self) -> str:
        parts = [f"problem={self.problem}", f"epsilon={float(self.epsilon):.4f}"]
        if self.gamma is not None:
            parts.append(f"gamma={float(self.gamma):.4f}")
        parts.append(f"ratio={float(self.ratio):.4f}")
        return " ".join(parts)


def mis_ratio_transfer(eps) -> RatioTransfer:
    """(1 - eps) for cubic max-leaf gives (1 - 141 eps) for cubic independent set."""
    e = _exact(eps)
    if not 0 <= e < Fraction(1, 141):
        raise EpsilonOutOfRange(f"epsilon must lie in [0, 1/141), got {eps}")
    gamma = Fraction(141, 2) * e
    return RatioTransfer("mis", e, gamma, 1 - 2 * gamma)


def cds_ratio_transfer(eps) -> RatioTransfer:
    """(1 + eps) for cubic min-CDS gives (1 - 3 eps) for cubic max-leaf."""
    e = _exact(eps)
    if not 0 <= e < Fraction(1, 3):
        raise EpsilonOutOfRange(f"epsilon must lie in [0, 1/3), got {eps}")
    return RatioTransfer("cds", e, None, 1 - 3 * e)


def vc_ratio_transfer(eps) -> RatioTransfer:
    """(1 - eps) for max-leaf gives a (1 + 4 eps) vertex cover on cubic graphs."""
    e = _exact(eps)
    if not 0 <= e < 1:
        raise EpsilonOutOfRange(f"epsilon must lie in [0, 1), got {eps}")
    return RatioTransfer("vc", e, None, 1 + 4 * e)


TRANSFERS = {"mis": mis_ratio_transfer, "cds": cds_ratio_transfer, "vc": vc_ratio_transfer}


# --------------------------------------------------------------------------
# the independent-set pipeline

TreeProvider = Callable[[Graph], SpanningTree]


@dataclass(frozen=True)
class PipelineResult:
    independent_set: frozenset[int]  # original vertex ids of the input graph
    instance: WeightedInstance
    expansion: ExpansionMap
    cubic_tree: SpanningTree
    weighted_tree: SpanningTree
    backward: BackwardResult

    @property
    def cubic_leaves(self) -> int:
        return len(self.cubic_tree.leaves())


def mis_pipeline(g: Graph, provider: TreeProvider) -> PipelineResult:
    """Build, expand to a cubic graph, ask the provider for a tree, contract and extract."""
    inst = build_from_cubic(g)
    exp = expand_degree_two(inst)
    t = provider(exp.cubic)
    if not isinstance(t, SpanningTree):
        raise ProviderContractViolated("provider did not return a spanning tree")
    try:
        t = SpanningTree(exp.cubic, t.tree_edges)
    except NotSpanningTree as exc:
        raise ProviderContractViolated(f"provider tree is invalid: {exc}") from exc
    weighted = contract_tree(exp, t)
    back = set_from_tree(inst, weighted)
    chosen = frozenset(inst.from_base(back.independent_set))
    return PipelineResult(chosen, inst, exp, t, weighted, back)


@dataclass(frozen=True)
class CertifiedProvider:
    """Tree provider for the cubic expansion of one fixed input graph.

    It lifts the forward-map tree built from an oracle-maximum independent set.
    ``lower`` is that tree's leaf count; ``upper`` bounds every spanning tree of
    the expansion (contraction loses at most 3 leaves per expanded vertex, and the
    contracted tree obeys the backward bound with |I| <= x*). When
    3.75n + 1.5x* is an integer, lower == upper and the tree is optimal.
    """

    cubic: Graph
    tree: SpanningTree
    optimum_mis: int
    lower: int
    upper: int

    def __call__(self, h: Graph) -> SpanningTree:
        if h != self.cubic:
            raise ProviderContractViolated("provider was built for a different graph")
        return self.tree

    @property
    def certified_optimal(self) -> bool:
        return self.lower == self.upper

    def epsilon_bound(self, t: SpanningTree) -> Fraction:
        """Upper bound on 1 - leaves(t)/OPT for any tree of the expansion."""
        return max(Fraction(0), 1 - Fraction(len(t.leaves()), self.upper))


def certified_provider(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> CertifiedProvider:
    x, witness = max_independent_set(g, budget)
    inst = build_from_cubic(g)
    exp = expand_degree_two(inst)
    tree = lift_tree(exp, synthesize_tree(inst, inst.to_base(witness)).tree)
    upper = upper_bound(g.n, x) + 3 * exp.x
    return CertifiedProvider(exp.cubic, tree, x, len(tree.leaves()), upper)
