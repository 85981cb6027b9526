"""Named test graphs and seeded random generators."""

from __future__ import annotations

import random

from .errors import UnsatisfiableParameters
from .graph import Graph, edge, is_connected

MODELS = ("random-cubic", "k33", "petersen", "prism", "theta", "k4")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k4() -> Graph:
    return complete_graph(4)


def k33() -> Graph:
    return Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism(n: int = 6) -> Graph:
    """Circular ladder C_{n/2} x K2; ``prism(6)`` is the triangular prism."""
    if n < 6 or n % 2:
        raise UnsatisfiableParameters("prism needs an even n >= 6")
    k = n // 2
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def theta() -> Graph:
    """Two cubic vertices (0, 1) joined by three paths of length two (via 2, 3, 4)."""
    return Graph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def random_cubic(n: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Connected simple cubic graph from the pairing model with rejection."""
    if n < 4 or n % 2:
        raise UnsatisfiableParameters(f"no cubic graph on {n} vertices")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = edge(u, v)
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok and is_connected(n, edges):
            return Graph(n, frozenset(edges))
    raise UnsatisfiableParameters(f"pairing model failed {max_tries} times for n={n}")


def random_connected_graph(n: int, p: float, seed: int, max_tries: int = 10_000) -> Graph:
    """G(n, p) conditioned on connectivity."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        edges = [e for e in pairs if rng.random() < p]
        if is_connected(n, edges):
            return Graph.from_edges(n, edges)
    raise UnsatisfiableParameters(f"G({n}, {p}) never connected in {max_tries} tries")


def generate(model: str, n: int | None = None, seed: int = 0) -> Graph:
    if model == "random-cubic":
        if n is None:
            raise UnsatisfiableParameters("random-cubic needs n")
        return random_cubic(n, seed)
    if model == "prism":
        return prism(n or 6)
    fixed = {"k33": (k33, 6), "petersen": (petersen, 10), "theta": (theta, 5), "k4": (k4, 4)}
    if model not in fixed:
        raise UnsatisfiableParameters(f"unknown model {model!r}")
    build, size = fixed[model]
    if n is not None and n != size:
        raise UnsatisfiableParameters(f"{model} has exactly {size} vertices")
    return build()
