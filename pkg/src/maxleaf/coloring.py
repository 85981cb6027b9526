"""Constructive 3-coloring of connected cubic graphs other than K4 (Brooks, Delta=3)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Mapping

from .errors import Disconnected, Improper, IsK4, NotCubic
from .graph import Graph


class Color(IntEnum):
    RED = 0
    GREEN = 1
    BLUE = 2

    def __str__(self):
        return self.name.lower()

    @classmethod
    def parse(cls, token: str) -> "Color":
        return cls[token.upper()]


@dataclass(frozen=True)
class Coloring:
    colors: tuple[Color, ...]

    def __getitem__(self, v: int) -> Color:
        return self.colors[v]

    def classes(self) -> dict[Color, list[int]]:
        out = {c: [] for c in Color}
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class OrderedColoring:
    """Renumbering that puts red, green and blue vertices into contiguous blocks.

    ``permutation[old] = new``; new ids ``0..r-1`` are red, ``r..r+g-1`` green,
    the rest blue.
    """

    permutation: tuple[int, ...]
    r: int
    g: int
    b: int

    def __post_init__(self):
        if self.r < 1 or self.g < 1:
            raise Improper("red and green classes must be non-empty")
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise Improper("permutation is not a bijection")

    @property
    def n(self) -> int:
        return len(self.permutation)

    def color_of_new(self, v: int) -> Color:
        if v < self.r:
            return Color.RED
        if v < self.r + self.g:
            return Color.GREEN
        return Color.BLUE

    @property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for old, new in enumerate(self.permutation):
            inv[new] = old
        return tuple(inv)

    def to_new(self, vertices: Iterable[int]) -> set[int]:
        return {self.permutation[v] for v in vertices}

    def to_old(self, vertices: Iterable[int]) -> set[int]:
        inv = self.inverse
        return {inv[v] for v in vertices}


def is_proper(g: Graph, colors: Mapping[int, int] | tuple) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def _is_k4(g: Graph) -> bool:
    return g.n == 4 and g.m == 6


def _articulation_points(g: Graph) -> list[int]:
    n = g.n
    disc = [-1] * n
    low = [0] * n
    points = set()
    timer = 0
    for s in range(n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = timer
        timer += 1
        root_children = 0
        stack = [(s, -1, iter(g.adjacency[s]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == s:
                        root_children += 1
                    stack.append((w, u, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != s and low[u] >= disc[p]:
                        points.add(p)
        if root_children > 1:
            points.add(s)
    return sorted(points)


def _bfs_order(g: Graph, root: int, allowed: set[int]) -> list[int]:
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def _greedy(g: Graph, order: list[int], colors: dict[int, int]) -> None:
    for v in order:
        used = {colors[w] for w in g.adjacency[v] if w in colors}
        free = [c for c in range(3) if c not in used]
        if not free:
            raise Improper(f"greedy step failed at vertex {v}")
        colors[v] = free[0]


def _color_rooted(g: Graph, root: int, part: set[int]) -> dict[int, int]:
    # reverse BFS order: each non-root vertex still has its parent uncolored
    order = _bfs_order(g, root, part)
    colors: dict[int, int] = {}
    _greedy(g, order[::-1], colors)
    return colors


def _lovasz_triple(g: Graph) -> tuple[int, int, int]:
    for v in range(g.n):
        nbrs = g.adjacency[v]
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if g.has_edge(a, b):
                    continue
                rest = set(range(g.n)) - {a, b}
                if len(_bfs_order(g, v, rest)) == len(rest):
                    return v, a, b
    raise Improper("no vertex with two non-adjacent neighbors keeping the graph connected")


def three_color(g: Graph) -> Coloring:
    """Proper 3-coloring of a connected cubic graph that is not K4."""
    if _is_k4(g):
        raise IsK4("K4 needs four colors")
    if not g.is_cubic():
        raise NotCubic("graph is not cubic")
    if not g.is_connected():
        raise Disconnected("graph is not connected")

    cut = _articulation_points(g)
    if cut:
        # split at one cut vertex; it has degree < 3 inside every piece
        c = cut[0]
        rest = set(range(g.n)) - {c}
        colors: dict[int, int] = {}
        while rest:
            start = min(rest)
            comp = set(_bfs_order(g, start, rest))
            rest -= comp
            piece = _color_rooted(g, c, comp | {c})
            shift = piece[c]
            for v in comp:
                colors[v] = (piece[v] - shift) % 3
        colors[c] = 0
    else:
        v, a, b = _lovasz_triple(g)
        colors = {a: 0, b: 0}
        order = _bfs_order(g, v, set(range(g.n)) - {a, b})
        _greedy(g, order[::-1], colors)

    result = tuple(Color(colors[v]) for v in range(g.n))
    if not is_proper(g, result):
        raise Improper("constructed coloring is not proper")
    return Coloring(result)


def normalize_coloring(g: Graph, c: Coloring) -> OrderedColoring:
    if len(c.colors) != g.n:
        raise Improper("coloring does not cover the graph")
    if not is_proper(g, c.colors):
        raise Improper("coloring is not proper")
    classes = c.classes()
    # non-empty classes take red, then green; empty ones fall to blue
    order = [col for col in Color if classes[col]] + [col for col in Color if not classes[col]]
    blocks = [sorted(classes[col]) for col in order]
    if not blocks[0] or not blocks[1]:
        raise NotCubic("a proper coloring of a graph with edges uses two colors")
    permutation = [0] * g.n
    new = 0
    for block in blocks:
        for old in block:
            permutation[old] = new
            new += 1
    return OrderedColoring(tuple(permutation), len(blocks[0]), len(blocks[1]), len(blocks[2]))
