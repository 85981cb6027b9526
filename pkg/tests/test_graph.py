from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxleaf import generators as gen
from maxleaf.errors import Disconnected, InvalidGraph, InvalidOrientation, MalformedOutTree, NotSpanningTree
from maxleaf.graph import (
    Graph,
    Orientation,
    OutTree,
    SpanningTree,
    break_cycles,
    bfs_tree,
    components,
    count_weighted_leaves,
    orient_out_tree,
    perturb_tree,
    random_spanning_tree,
    tree_path,
    validate_graph,
)


def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_validate_named_graphs():
    r = validate_graph(gen.k4())
    assert r.connected and r.cubic and r.vertex_count == 4
    r = validate_graph(gen.cycle(6))
    assert r.connected and not r.cubic and set(gen.cycle(6).degrees) == {2}
    r = validate_graph(gen.petersen())
    assert r.connected and r.cubic and r.vertex_count == 10


def test_relabel_preserves_structure():
    g = gen.petersen()
    perm = list(range(10))[::-1]
    h = g.relabel(perm)
    assert h.m == g.m and h.is_cubic()
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges)


def test_count_weighted_leaves_examples():
    k4 = gen.k4()
    star = SpanningTree.from_edges(k4, [(0, 1), (0, 2), (0, 3)])
    assert count_weighted_leaves(k4, star) == 3
    c6 = gen.cycle(6)
    assert count_weighted_leaves(c6, bfs_tree(c6)) == 0


def test_spanning_tree_validation():
    c4 = gen.cycle(4)
    with pytest.raises(NotSpanningTree):
        SpanningTree.from_edges(c4, [(0, 1), (1, 2)])
    with pytest.raises(NotSpanningTree):
        SpanningTree.from_edges(c4, [(0, 1), (1, 2), (0, 2)])


def test_orient_out_tree_path():
    p = gen.path(3)
    t = bfs_tree(p)
    assert orient_out_tree(t, 0).arcs == {(0, 1), (1, 2)}
    assert orient_out_tree(t, 1).arcs == {(1, 0), (1, 2)}


def test_orient_out_tree_star_from_leaf():
    k13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    ot = orient_out_tree(bfs_tree(k13), 1)
    assert ot.parent == (1, -1, 0, 0)
    with pytest.raises(MalformedOutTree):
        OutTree(ot.tree, 1, frozenset({(0, 1), (0, 2), (0, 3)}))


def test_orientation_must_biject():
    c4 = gen.cycle(4)
    with pytest.raises(InvalidOrientation):
        Orientation(c4, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(InvalidOrientation):
        Orientation(c4, frozenset({(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)}))


def test_break_cycles_keeps_trees_and_pendants():
    c4p = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])
    t = break_cycles(c4p, c4p.edges)
    assert len(t.tree_edges) == 4 and t.degree(4) == 1
    tree = bfs_tree(c4p)
    assert break_cycles(c4p, tree.tree_edges) == tree
    with pytest.raises(Disconnected):
        break_cycles(c4p, [(0, 1), (2, 3)])


def test_break_cycles_never_loses_leaves_of_input():
    # leaves of the input subgraph stay leaves: only cycle edges are removed
    k4 = gen.k4()
    t = break_cycles(k4, k4.edges)
    assert len(t.tree_edges) == 3


def test_components_and_path():
    assert components(5, [(0, 1), (3, 4)]) == [[0, 1], [2], [3, 4]]
    t = bfs_tree(gen.path(5))
    assert tree_path(t, 0, 4) == [0, 1, 2, 3, 4]


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([6, 8, 10, 14]), seed=st.integers(0, 10_000))
def test_random_trees_are_spanning(n, seed):
    g = gen.random_cubic(n, seed)
    rng = random.Random(seed)
    t = random_spanning_tree(g, rng)
    assert len(t.tree_edges) == n - 1
    u = perturb_tree(t, rng, swaps=5)
    assert u.host == g and len(u.tree_edges) == n - 1


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), keep=st.integers(0, 6))
def test_break_cycles_preserves_leaves_property(seed, keep):
    g = gen.random_cubic(10, seed)
    rng = random.Random(seed)
    base = random_spanning_tree(g, rng)
    extra = rng.sample(sorted(g.edges - base.tree_edges), keep)
    subset = set(base.tree_edges) | set(extra)
    deg = {v: 0 for v in range(g.n)}
    for u, v in subset:
        deg[u] += 1
        deg[v] += 1
    t = break_cycles(g, subset)
    assert all(t.degree(v) == 1 for v in range(g.n) if deg[v] == 1)
    assert t.tree_edges <= subset
