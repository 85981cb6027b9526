"""Brute-force ground truth at desk scale.

Every solver takes an explicit :class:`OracleBudget`; nothing is read from the
environment. Search orders are fixed by vertex id so witnesses are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, Disconnected, MaxLeafError
from .graph import Graph, SpanningTree, is_connected


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 64
    max_trees_enumerated: int = 5_000_000
    time_limit: float = 120.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_trees_enumerated <= 0 or self.time_limit <= 0:
            raise ValueError("budget fields must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Meter:
    """Counts search nodes against a budget."""

    def __init__(self, budget: OracleBudget, what: str):
        self.budget = budget
        self.what = what
        self.count = 0
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self):
        self.count += 1
        if self.count > self.budget.max_trees_enumerated:
            raise BudgetExceeded(f"{self.what}: more than {self.budget.max_trees_enumerated} steps")
        if self.count & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"{self.what}: time limit {self.budget.time_limit}s exceeded")


def _check_size(g: Graph, budget: OracleBudget, what: str):
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{what}: {g.n} vertices exceeds max_vertices={budget.max_vertices}")


def _masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# --------------------------------------------------------------------------
# independent set / vertex cover


def max_independent_set(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    _check_size(g, budget, "max_independent_set")
    adj = _masks(g)
    meter = _Meter(budget, "max_independent_set")
    best = [0, 0]

    def rec(cand: int, chosen: int, size: int):
        meter.tick()
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        verts = _bits(cand)
        # a vertex of degree <= 1 in the candidate graph is always safe to take
        low = min(verts, key=lambda v: ((adj[v] & cand).bit_count(), v))
        if (adj[low] & cand).bit_count() <= 1:
            rec(cand & ~(adj[low] | 1 << low), chosen | 1 << low, size + 1)
            return
        hi = max(verts, key=lambda v: ((adj[v] & cand).bit_count(), -v))
        rec(cand & ~(adj[hi] | 1 << hi), chosen | 1 << hi, size + 1)
        rec(cand & ~(1 << hi), chosen, size)

    rec((1 << g.n) - 1, 0, 0)
    return best[0], frozenset(_bits(best[1]))


def min_vertex_cover(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    size, mis = max_independent_set(g, budget)
    return g.n - size, frozenset(range(g.n)) - mis


# --------------------------------------------------------------------------
# leafy spanning trees


def _leafy_tree(g: Graph, weights: Sequence[int], budget: OracleBudget, what: str):
    """Branch and bound over spanning trees grown from vertex 0.

    Every open tree vertex either stays a leaf or becomes internal and adopts
    all of its neighbours outside the tree. Adopting everything loses nothing:
    moving an outside neighbour u under an internal v keeps u's degree and can
    only turn u's old parent into a leaf. The root is handled by also trying
    each single child for a leaf root.
    """
    _check_size(g, budget, what)
    n = g.n
    if n == 0:
        raise Disconnected(f"{what}: empty graph")
    if not g.is_connected():
        raise Disconnected(f"{what}: graph is not connected")
    if n == 1:
        return 0, SpanningTree(g, frozenset())
    meter = _Meter(budget, what)
    full = (1 << n) - 1
    adj = _masks(g)
    total = sum(weights)
    deg = [0] * n
    parent = [-1] * n
    best = [-1, None]

    def reachable(open_mask: int, in_tree: int) -> bool:
        # can every outside vertex still be reached through open vertices?
        outside = full & ~in_tree
        seen = 0
        frontier = open_mask
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= outside & ~seen
            seen |= nxt
            frontier = nxt
        return seen == outside

    def rec(in_tree: int, open_mask: int):
        meter.tick()
        if in_tree == full:
            value = sum(weights[v] for v in range(n) if deg[v] == 1)
            if value > best[0]:
                best[0] = value
                best[1] = [(parent[v], v) for v in range(n) if parent[v] >= 0]
            return
        internal = sum(weights[v] for v in range(n) if deg[v] >= 2)
        ub = total - internal
        useful = [v for v in _bits(open_mask) if adj[v] & ~in_tree]
        if not useful:
            return
        if all(weights[v] for v in useful):
            ub -= 1  # some open vertex has to adopt a child
        if ub <= best[0]:
            return
        v = max(useful, key=lambda u: ((adj[u] & ~in_tree).bit_count(), -u))
        kids = _bits(adj[v] & ~in_tree)
        # v internal: adopt every outside neighbour
        for w in kids:
            parent[w] = v
            deg[w] = 1
        deg[v] += len(kids)
        rec(in_tree | sum(1 << w for w in kids), (open_mask & ~(1 << v)) | sum(1 << w for w in kids))
        deg[v] -= len(kids)
        for w in kids:
            parent[w] = -1
            deg[w] = 0
        # v stays as it is
        rest = open_mask & ~(1 << v)
        if reachable(rest, in_tree):
            rec(in_tree, rest)

    # root 0 internal, or a leaf hanging from a single child
    rec(1, 1)
    for u in _bits(adj[0]):
        parent[u] = 0
        deg[0] = deg[u] = 1
        rec(1 | 1 << u, 1 << u)
        parent[u] = -1
        deg[0] = deg[u] = 0
    return best[0], SpanningTree.from_edges(g, best[1])


def max_leaf_spanning_tree(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, SpanningTree]:
    return _leafy_tree(g, [1] * g.n, budget, "max_leaf_spanning_tree")


def max_weighted_leaf_tree(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, SpanningTree]:
    """Maximum number of leaves of host degree 3 over all spanning trees."""
    return _leafy_tree(g, [1 if d == 3 else 0 for d in g.degrees], budget, "max_weighted_leaf_tree")


# --------------------------------------------------------------------------
# connected dominating set


def min_connected_dominating_set(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    _check_size(g, budget, "min_connected_dominating_set")
    if g.n < 2:
        raise MaxLeafError("min_connected_dominating_set needs n >= 2")
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    meter = _Meter(budget, "min_connected_dominating_set")
    adj = _masks(g)
    closed = [adj[v] | 1 << v for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            meter.tick()
            dominated = 0
            mask = 0
            for v in combo:
                dominated |= closed[v]
                mask |= 1 << v
            if dominated != full:
                continue
            seen = 1 << combo[0]
            frontier = seen
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= adj[v]
                nxt &= mask & ~seen
                seen |= nxt
                frontier = nxt
            if seen == mask:
                return k, frozenset(combo)
    raise AssertionError("the whole vertex set is a connected dominating set")


# --------------------------------------------------------------------------
# spanning tree enumeration


def _tree_edge_sets(g: Graph, meter: _Meter) -> Iterator[list[int]]:
    """Contraction/deletion enumeration; yields lists of indices into ``g.sorted_edges``.

    An edge is deleted only when it is not a bridge of the current (contracted)
    multigraph, so every branch ends in at least one tree.
    """
    edges = g.sorted_edges
    n = g.n
    target = n - 1

    def bridge(cu: int, cv: int, comp: list[int], rest: list[int]) -> bool:
        adj: dict[int, list[int]] = {}
        for f in rest:
            a, b = comp[edges[f][0]], comp[edges[f][1]]
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        seen = {cu}
        stack = [cu]
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y == cv:
                    return False
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return True

    def rec(comp: list[int], avail: list[int], chosen: list[int]):
        meter.tick()
        if len(chosen) == target:
            yield chosen
            return
        e, rest = avail[0], avail[1:]
        u, v = edges[e]
        cu, cv = comp[u], comp[v]
        merged = [cv if c == cu else c for c in comp]
        kept = [f for f in rest if merged[edges[f][0]] != merged[edges[f][1]]]
        chosen.append(e)
        yield from rec(merged, kept, chosen)
        chosen.pop()
        if not bridge(cu, cv, comp, rest):
            yield from rec(comp, rest, chosen)

    if n <= 1:
        yield []
        return
    yield from rec(list(range(n)), list(range(len(edges))), [])


def enumerate_spanning_trees(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Iterator[SpanningTree]:
    _check_size(g, budget, "enumerate_spanning_trees")
    if not g.is_connected():
        return
    meter = _Meter(budget, "enumerate_spanning_trees")
    edges = g.sorted_edges
    for chosen in _tree_edge_sets(g, meter):
        yield SpanningTree(g, frozenset(edges[i] for i in chosen))


def iter_tree_edge_sets(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Iterator[tuple[tuple[int, int], ...]]:
    """Like :func:`enumerate_spanning_trees` but yields raw edge tuples (no re-validation)."""
    _check_size(g, budget, "enumerate_spanning_trees")
    if not g.is_connected():
        return
    meter = _Meter(budget, "enumerate_spanning_trees")
    edges = g.sorted_edges
    for chosen in _tree_edge_sets(g, meter):
        yield tuple(edges[i] for i in chosen)


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: any cofactor of the Laplacian."""
    if g.n <= 1:
        return 1
    if not is_connected(g.n, g.edges):
        return 0
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    return int(round(np.linalg.det(lap[1:, 1:])))
