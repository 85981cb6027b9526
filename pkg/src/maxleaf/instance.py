"""Building the weighted instance from a cubic graph, and the cubic expansion of it.

Vertex layout of the weighted instance for a base graph on n vertices:

* ``9*i + k`` is gadget vertex ``"abcdefghi"[k]`` of the gadget replacing v_i,
* ``9*n + i`` is connection vertex c_i,
* ``10*n + k`` subdivides the k-th edge (in sorted order) of the augmented graph.

In the augmented graph, v_i has id ``i`` and c_i has id ``n + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .coloring import Color, OrderedColoring, normalize_coloring, three_color
from .errors import (
    BadColoring,
    DegreeOutOfRange,
    Disconnected,
    InvalidGraph,
    IsK4,
    NotCubic,
    NotIncident,
)
from .gadgets import LABELS, degree2_gadget, vertex_gadget
from .graph import Edge, Graph, SpanningTree, edge

TERMINAL_ORDER = ("b", "g", "h", "i")


@dataclass(frozen=True)
class Role:
    kind: str  # "connection" | "gadget" | "subdivision"
    index: int = -1
    label: str = ""
    edge: Edge | None = None

    def token(self) -> str:
        if self.kind == "connection":
            return f"conn:{self.index}"
        if self.kind == "gadget":
            return f"gadget:{self.index}:{self.label}"
        return f"sub:{self.edge[0]}-{self.edge[1]}"

    @classmethod
    def parse(cls, token: str) -> "Role":
        head, _, rest = token.partition(":")
        try:
            if head == "conn":
                return cls("connection", int(rest))
            if head == "gadget":
                i, label = rest.split(":")
                if label not in LABELS:
                    raise ValueError(label)
                return cls("gadget", int(i), label)
            if head == "sub":
                u, v = rest.split("-")
                return cls("subdivision", edge=edge(int(u), int(v)))
        except ValueError:
            pass
        raise InvalidGraph(f"bad role token {token!r}")


@dataclass(frozen=True)
class AugmentedGraph:
    """The base graph plus the connection cycle and spokes (before subdivision)."""

    base: Graph
    graph: Graph

    @property
    def n(self) -> int:
        return self.base.n

    def v(self, i: int) -> int:
        return i

    def c(self, i: int) -> int:
        return self.base.n + i

    def is_connection(self, x: int) -> bool:
        return x >= self.base.n


def augment(base: Graph) -> AugmentedGraph:
    n = base.n
    edges = set(base.edges)
    edges |= {edge(n + i, n + (i + 1) % n) for i in range(n)}
    edges |= {(i, n + i) for i in range(n)}
    return AugmentedGraph(base, Graph(2 * n, frozenset(edges)))


@dataclass(frozen=True)
class WeightedInstance:
    graph: Graph
    augmented: AugmentedGraph
    coloring: OrderedColoring
    roles: tuple[Role, ...]
    # (gadget index, terminal label) -> augmented-graph neighbor of v_i
    terminal_assignment: dict[tuple[int, str], int]
    subdivision: dict[Edge, int]  # augmented edge -> subdivision vertex id

    @property
    def n(self) -> int:
        return self.augmented.n

    @property
    def base(self) -> Graph:
        return self.augmented.base

    def gadget_vertex(self, i: int, label: str) -> int:
        return 9 * i + LABELS.index(label)

    def gadget_vertices(self, i: int) -> range:
        return range(9 * i, 9 * i + 9)

    def connection(self, i: int) -> int:
        return 9 * self.n + i

    def connection_index(self, x: int) -> int | None:
        k = x - 9 * self.n
        return k if 0 <= k < self.n else None

    @cached_property
    def terminal_for(self) -> dict[tuple[int, int], str]:
        """(gadget index, augmented neighbor) -> terminal label."""
        return {(i, nb): lab for (i, lab), nb in self.terminal_assignment.items()}

    @cached_property
    def edge_of_subdivision(self) -> dict[int, Edge]:
        return {s: e for e, s in self.subdivision.items()}

    def color(self, i: int) -> Color:
        return self.coloring.color_of_new(i)

    def to_base(self, vertices: Iterable[int]) -> set[int]:
        """Original input ids -> renumbered base ids."""
        return self.coloring.to_new(vertices)

    def from_base(self, vertices: Iterable[int]) -> set[int]:
        return self.coloring.to_old(vertices)


def terminal_of(inst: WeightedInstance, endpoint: int, e: Edge) -> int:
    """The instance vertex standing in for ``endpoint`` on the subdivided edge ``e``."""
    aug = inst.augmented
    e = edge(*e)
    if e not in aug.graph.edges or endpoint not in e:
        raise NotIncident(f"{endpoint} is not an endpoint of augmented edge {e}")
    if aug.is_connection(endpoint):
        return inst.connection(endpoint - aug.n)
    other = e[0] if e[1] == endpoint else e[1]
    return inst.gadget_vertex(endpoint, inst.terminal_for[(endpoint, other)])


def build_weighted_instance(g: Graph, oc: OrderedColoring) -> WeightedInstance:
    if g.n == 4 and g.m == 6:
        raise IsK4("the reduction excludes K4")
    if not g.is_cubic():
        raise NotCubic("input graph is not cubic")
    if not g.is_connected():
        raise Disconnected("input graph is not connected")
    if oc.n != g.n:
        raise BadColoring("coloring size does not match the graph")
    base = g.relabel(oc.permutation)
    for u, v in base.edges:
        if oc.color_of_new(u) == oc.color_of_new(v):
            raise BadColoring(f"edge {(u, v)} is monochromatic")

    n = g.n
    aug = augment(base)
    gadget = vertex_gadget()
    roles: list[Role] = []
    for i in range(n):
        roles.extend(Role("gadget", i, lab) for lab in LABELS)
    roles.extend(Role("connection", i) for i in range(n))

    assignment: dict[tuple[int, str], int] = {}
    for i in range(n):
        nbrs = aug.graph.neighbors(i)  # three base neighbors, then c_i
        for lab, nb in zip(TERMINAL_ORDER, nbrs):
            assignment[(i, lab)] = nb

    edges: list[Edge] = []
    for i in range(n):
        for a, b in gadget.edges:
            edges.append(edge(9 * i + LABELS.index(a), 9 * i + LABELS.index(b)))

    lookup = {(i, nb): lab for (i, lab), nb in assignment.items()}

    def stand_in(x: int, other: int) -> int:
        if x >= n:
            return 9 * n + (x - n)
        return 9 * x + LABELS.index(lookup[(x, other)])

    subdivision: dict[Edge, int] = {}
    for k, (u, v) in enumerate(aug.graph.sorted_edges):
        s = 10 * n + k
        subdivision[(u, v)] = s
        roles.append(Role("subdivision", edge=(u, v)))
        edges.append(edge(stand_in(u, v), s))
        edges.append(edge(stand_in(v, u), s))

    graph = Graph.from_edges(len(roles), edges)
    return WeightedInstance(graph, aug, oc, tuple(roles), assignment, subdivision)


def build_from_cubic(g: Graph) -> WeightedInstance:
    """Color with the constructive Brooks routine, normalize, and build."""
    return build_weighted_instance(g, normalize_coloring(g, three_color(g)))


@dataclass(frozen=True)
class InstanceAudit:
    n: int
    vertices: int
    degree2: int
    weighted: int
    connections: int
    max_degree: int
    min_degree: int

    @property
    def passed(self) -> bool:
        n = self.n
        return (2 * self.vertices == 27 * n and 2 * self.degree2 == 9 * n
                and self.weighted == 9 * n and self.connections == n
                and self.max_degree == 3 and self.min_degree == 2)

    def lines(self) -> list[str]:
        return [
            f"base vertices: {self.n}",
            f"vertices: {self.vertices}",
            f"degree-2 vertices: {self.degree2}",
            f"weighted vertices: {self.weighted}",
            f"connection vertices: {self.connections}",
            f"degree range: {self.min_degree}..{self.max_degree}",
            f"count audit: {'PASS' if self.passed else 'FAIL'}",
        ]


def audit_instance(inst: WeightedInstance) -> InstanceAudit:
    degs = inst.graph.degrees
    return InstanceAudit(
        n=inst.n,
        vertices=inst.graph.n,
        degree2=sum(1 for d in degs if d == 2),
        weighted=sum(1 for d in degs if d == 3),
        connections=sum(1 for r in inst.roles if r.kind == "connection"),
        max_degree=inst.graph.max_degree,
        min_degree=inst.graph.min_degree,
    )


# --------------------------------------------------------------------------
# degree-2 expansion


@dataclass(frozen=True)
class ExpansionMap:
    source: Graph
    cubic: Graph
    # cubic vertex -> (source vertex, gadget label or "" for the vertex itself)
    origin: tuple[tuple[int, str], ...]
    expanded: tuple[int, ...]  # source vertices that were replaced

    @property
    def x(self) -> int:
        return len(self.expanded)

    @cached_property
    def gadget_ids(self) -> dict[int, dict[str, int]]:
        out: dict[int, dict[str, int]] = {p: {"t": p} for p in self.expanded}
        for h, (p, lab) in enumerate(self.origin):
            if lab:
                out[p][lab] = h
        return out


def expand_degree_two(source: Graph | WeightedInstance) -> ExpansionMap:
    """Replace every degree-2 vertex by the cubic 1-terminal gadget.

    The terminal keeps the replaced vertex's id; the five internal vertices get
    fresh ids after all source ids.
    """
    g = source.graph if isinstance(source, WeightedInstance) else source
    if g.n and (g.max_degree > 3 or g.min_degree < 2):
        raise DegreeOutOfRange(f"degrees must lie in [2, 3], got {g.min_degree}..{g.max_degree}")
    gadget = degree2_gadget()
    inner = gadget.internal
    expanded = tuple(v for v in range(g.n) if g.degree(v) == 2)
    origin: list[tuple[int, str]] = [(v, "") for v in range(g.n)]
    edges = list(g.edges)
    nxt = g.n
    for p in expanded:
        ids = {"t": p}
        for lab in inner:
            ids[lab] = nxt
            origin.append((p, lab))
            nxt += 1
        edges.extend(edge(ids[a], ids[b]) for a, b in gadget.edges)
    cubic = Graph.from_edges(nxt, edges)
    if cubic.n and not cubic.is_cubic():
        raise DegreeOutOfRange("expansion is not cubic")
    return ExpansionMap(g, cubic, tuple(origin), expanded)


def contract_tree(m: ExpansionMap, t: SpanningTree) -> SpanningTree:
    """Drop the gadget interiors; each terminal becomes its source vertex again.

    The terminal is a cut vertex between its gadget and the rest, so the
    remaining edges span the source graph. Weighted leaves drop by exactly the
    number of gadget-interior leaves, which is at most 3 per gadget.
    """
    if t.host != m.cubic:
        t = SpanningTree(m.cubic, t.tree_edges)
    n = m.source.n
    kept = [e for e in t.tree_edges if e[0] < n and e[1] < n]
    return SpanningTree(m.source, frozenset(kept))


def lift_tree(m: ExpansionMap, t: SpanningTree) -> SpanningTree:
    """Inverse of :func:`contract_tree` using the canonical 3-leaf gadget tree."""
    if t.host != m.source:
        t = SpanningTree(m.source, t.tree_edges)
    canon = degree2_gadget().canonical_tree
    edges = set(t.tree_edges)
    for p, ids in m.gadget_ids.items():
        edges.update(edge(ids[a], ids[b]) for a, b in canon)
    return SpanningTree(m.cubic, frozenset(edges))


def gadget_interior_leaves(m: ExpansionMap, t: SpanningTree) -> dict[int, int]:
    return {
        p: sum(1 for lab, h in ids.items() if lab != "t" and t.degree(h) == 1)
        for p, ids in m.gadget_ids.items()
    }
