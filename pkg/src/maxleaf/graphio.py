"""Line-oriented graph files.

::

    p graph <n> <m>
    c <v> <red|green|blue>
    r <v> <role-token>
    e <u> <v>

Ids are 0-based. The canonical form lists the header, then color lines, role
lines and edge lines, each sorted by vertex (edges as sorted pairs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .coloring import Color
from .errors import GraphFormatError, InvalidGraph
from .graph import Edge, Graph, edge
from .instance import Role


@dataclass(frozen=True)
class GraphFile:
    n: int
    edges: tuple[Edge, ...]
    roles: dict[int, str] = field(default_factory=dict)
    colors: dict[int, Color] = field(default_factory=dict)

    @property
    def graph(self) -> Graph:
        return Graph(self.n, frozenset(self.edges))

    @classmethod
    def from_graph(cls, g: Graph, roles: dict[int, str] | None = None,
                   colors: dict[int, Color] | None = None) -> "GraphFile":
        return cls(g.n, g.sorted_edges, dict(roles or {}), dict(colors or {}))


def serialize(gf: GraphFile) -> str:
    lines = [f"p graph {gf.n} {len(gf.edges)}"]
    lines += [f"c {v} {gf.colors[v]}" for v in sorted(gf.colors)]
    lines += [f"r {v} {gf.roles[v]}" for v in sorted(gf.roles)]
    lines += [f"e {u} {v}" for u, v in sorted(gf.edges)]
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse(text: str) -> GraphFile:
    n = m = None
    edges: set[Edge] = set()
    roles: dict[int, str] = {}
    colors: dict[int, Color] = {}

    def vertex(token: str, lineno: int) -> int:
        (v,) = _ints([token], lineno)
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex {v} out of range 0..{n - 1}", lineno)
        return v

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(tokens) != 4 or tokens[1] != "graph":
                raise GraphFormatError("header must be 'p graph <n> <m>'", lineno)
            n, m = _ints(tokens[2:], lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("negative size in header", lineno)
            continue
        if n is None:
            raise GraphFormatError("content before header", lineno)
        if kind == "e":
            if len(tokens) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            u, v = vertex(tokens[1], lineno), vertex(tokens[2], lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at {u}", lineno)
            e = edge(u, v)
            if e in edges:
                raise GraphFormatError(f"duplicate edge {e}", lineno)
            edges.add(e)
        elif kind == "r":
            if len(tokens) != 3:
                raise GraphFormatError("role line must be 'r <v> <token>'", lineno)
            v = vertex(tokens[1], lineno)
            try:
                Role.parse(tokens[2])
            except InvalidGraph as exc:
                raise GraphFormatError(str(exc), lineno) from None
            if v in roles:
                raise GraphFormatError(f"duplicate role for {v}", lineno)
            roles[v] = tokens[2]
        elif kind == "c":
            if len(tokens) != 3:
                raise GraphFormatError("color line must be 'c <v> <color>'", lineno)
            v = vertex(tokens[1], lineno)
            try:
                col = Color.parse(tokens[2])
            except KeyError:
                raise GraphFormatError(f"unknown color {tokens[2]!r}", lineno) from None
            if v in colors:
                raise GraphFormatError(f"duplicate color for {v}", lineno)
            colors[v] = col
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)

    if n is None:
        raise GraphFormatError("missing header 'p graph <n> <m>'")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return GraphFile(n, tuple(sorted(edges)), roles, colors)


def read_graph_file(path: str | Path) -> GraphFile:
    return parse(Path(path).read_text())


def write_graph_file(path: str | Path, gf: GraphFile) -> None:
    Path(path).write_text(serialize(gf))


def parse_vertex_list(text: str) -> list[int]:
    """Vertex ids separated by commas and/or whitespace."""
    tokens = text.replace(",", " ").split()
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"bad vertex list {text!r}") from None
