"""Graph, orientation and spanning-tree primitives.

All objects here are immutable. Vertex ids are dense integers ``0..n-1`` and
undirected edges are stored as sorted pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    InvalidGraph,
    InvalidOrientation,
    MalformedOutTree,
    NotSpanningTree,
)

Edge = tuple[int, int]
Arc = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical (sorted) form of the undirected edge ``uv``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidGraph("vertex_count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            if not (0 <= u < v < self.vertex_count):
                raise InvalidGraph(f"edge {(u, v)} is not canonical or out of range")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            e = edge(int(u), int(v))
            if e in seen:
                raise InvalidGraph(f"parallel edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees)

    def is_connected(self) -> bool:
        return is_connected(self.vertex_count, self.edges)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Apply ``old id -> permutation[old id]`` to every edge."""
        if sorted(permutation) != list(range(self.vertex_count)):
            raise InvalidGraph("relabeling is not a permutation")
        return Graph(
            self.vertex_count,
            frozenset(edge(permutation[u], permutation[v]) for u, v in self.edges),
        )

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={len(self.edges)})"


def components(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_connected(n: int, edges: Iterable[Edge]) -> bool:
    return n <= 1 or len(components(n, edges)) == 1


def is_connected_subset(g: Graph, vertices: Iterable[int]) -> bool:
    """True when the subgraph induced by ``vertices`` is connected (and non-empty)."""
    vs = set(vertices)
    if not vs:
        return False
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


@dataclass(frozen=True)
class GraphReport:
    vertex_count: int
    edge_count: int
    connected: bool
    cubic: bool
    min_degree: int
    max_degree: int
    degree_counts: dict[int, int]

    def lines(self) -> list[str]:
        hist = " ".join(f"{d}:{c}" for d, c in sorted(self.degree_counts.items()))
        return [
            f"vertices: {self.vertex_count}",
            f"edges: {self.edge_count}",
            f"connected: {'yes' if self.connected else 'no'}",
            f"cubic: {'yes' if self.cubic else 'no'}",
            f"degree range: {self.min_degree}..{self.max_degree}",
            f"degree histogram: {hist}",
        ]


def validate_graph(g: Graph) -> GraphReport:
    return GraphReport(
        vertex_count=g.n,
        edge_count=g.m,
        connected=g.is_connected(),
        cubic=g.n > 0 and g.is_cubic(),
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        degree_counts=dict(Counter(g.degrees)),
    )


@dataclass(frozen=True)
class Orientation:
    host: Graph
    arcs: frozenset[Arc]

    def __post_init__(self):
        projected = [edge(u, v) for u, v in self.arcs]
        if len(projected) != len(set(projected)) or set(projected) != self.host.edges:
            raise InvalidOrientation("arcs do not orient the host edges bijectively")

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.host.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(o)) for o in out)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.host.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(i)) for i in inn)

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def reachable_from(self, root: int) -> set[int]:
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self.out_neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def restrict(self, subgraph: Graph) -> "Orientation":
        """The orientation induced on a spanning subgraph (same vertex ids)."""
        return Orientation(
            subgraph, frozenset(a for a in self.arcs if edge(*a) in subgraph.edges)
        )


@dataclass(frozen=True)
class SpanningTree:
    host: Graph
    tree_edges: frozenset[Edge]

    def __post_init__(self):
        n = self.host.n
        if not self.tree_edges <= self.host.edges:
            raise NotSpanningTree("tree edges are not a subset of the host edges")
        if len(self.tree_edges) != max(n - 1, 0):
            raise NotSpanningTree(
                f"expected {max(n - 1, 0)} edges, got {len(self.tree_edges)}"
            )
        if not is_connected(n, self.tree_edges):
            raise NotSpanningTree("tree edges do not connect the host")

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[Sequence[int]]) -> "SpanningTree":
        return cls(host, frozenset(edge(u, v) for u, v in edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.host.n)]
        for u, v in self.tree_edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.host.n) if len(self.adjacency[v]) == 1]

    def weighted_leaves(self) -> list[int]:
        deg = self.host.degrees
        return [
            v for v in range(self.host.n) if len(self.adjacency[v]) == 1 and deg[v] == 3
        ]


def count_weighted_leaves(host: Graph, t: SpanningTree) -> int:
    """Number of tree leaves whose degree in ``host`` is 3."""
    if t.host != host:
        # re-validate against the given host
        t = SpanningTree(host, t.tree_edges)
    return len(t.weighted_leaves())


@dataclass(frozen=True)
class OutTree:
    tree: SpanningTree
    root: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        if {edge(u, v) for u, v in self.arcs} != self.tree.tree_edges:
            raise MalformedOutTree("arcs do not orient the tree edges")
        indeg = Counter(v for _, v in self.arcs)
        if indeg.get(self.root, 0) != 0:
            raise MalformedOutTree("root has an incoming arc")
        for v in range(self.tree.host.n):
            if v != self.root and indeg.get(v, 0) != 1:
                raise MalformedOutTree(f"vertex {v} has in-degree {indeg.get(v, 0)}")

    @cached_property
    def parent(self) -> tuple[int, ...]:
        par = [-1] * self.tree.host.n
        for u, v in self.arcs:
            par[v] = u
        return tuple(par)


def orient_out_tree(t: SpanningTree, root: int) -> OutTree:
    if not 0 <= root < t.host.n:
        raise NotSpanningTree(f"root {root} is not a vertex of the host")
    arcs = []
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if w not in seen:
                seen.add(w)
                arcs.append((u, w))
                queue.append(w)
    return OutTree(t, root, frozenset(arcs))


def break_cycles(host: Graph, edge_subset: Iterable[Sequence[int]]) -> SpanningTree:
    """Reduce a connected spanning edge set to a spanning tree.

    Cycle edges are deleted smallest-first (lexicographic). Deleting the
    smallest non-bridge edge repeatedly keeps exactly the edges Kruskal keeps
    when scanning in descending order, which is how it is computed here.
    Edges at degree-1 vertices are bridges, so leaves survive.
    """
    edges = sorted({edge(u, v) for u, v in edge_subset})
    if not set(edges) <= host.edges:
        raise Disconnected("edge subset is not contained in the host")
    if not is_connected(host.n, edges):
        raise Disconnected("edge subset does not connect the host")
    parent = list(range(host.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    for u, v in reversed(edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            kept.append((u, v))
    return SpanningTree(host, frozenset(kept))


def bfs_tree(g: Graph, root: int = 0) -> SpanningTree:
    edges = []
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                edges.append((u, w))
                queue.append(w)
    return SpanningTree.from_edges(g, edges)


def random_spanning_tree(g: Graph, rng: random.Random) -> SpanningTree:
    """Uniform spanning tree by Wilson's loop-erased random walks."""
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    n = g.n
    in_tree = [False] * n
    nxt = [-1] * n
    in_tree[rng.randrange(n)] = True
    for start in range(n):
        u = start
        while not in_tree[u]:
            nxt[u] = rng.choice(g.adjacency[u])
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    return SpanningTree.from_edges(g, [(v, nxt[v]) for v in range(n) if nxt[v] >= 0])


def tree_path(t: SpanningTree, a: int, b: int) -> list[int]:
    prev = {a: -1}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in t.adjacency[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def perturb_tree(t: SpanningTree, rng: random.Random, swaps: int = 1) -> SpanningTree:
    """Apply random edge exchanges: add a non-tree edge, drop an edge of its cycle."""
    host = t.host
    current = set(t.tree_edges)
    non_tree = sorted(host.edges - current)
    if not non_tree:
        return t
    for _ in range(swaps):
        u, v = rng.choice(non_tree)
        tmp = SpanningTree(host, frozenset(current))
        path = tree_path(tmp, u, v)
        drop = edge(*rng.choice(list(zip(path, path[1:]))))
        current.remove(drop)
        current.add((u, v))
        non_tree.remove((u, v))
        non_tree.append(drop)
        non_tree.sort()
    return SpanningTree(host, frozenset(current))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(not (u in vs and v in vs) for u, v in g.edges)


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges)


def is_connected_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs or not is_connected_subset(g, vs):
        return False
    return all(v in vs or any(w in vs for w in g.adjacency[v]) for v in range(g.n))
