from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxleaf import generators as gen
from maxleaf.coloring import Color
from maxleaf.errors import InconsistentOrientation, NotIndependent, NotMaximal
from maxleaf.forward import (
    choose_root,
    extend_orientation,
    is_maximal_independent,
    lower_bound,
    maximalize_independent_set,
    orient_base_graph,
    orient_cycle,
    synthesize_tree,
    tree_from_independent_set,
)
from maxleaf.instance import build_from_cubic
from maxleaf.oracles import max_independent_set


def _neighbor_scan_maximal(g, s):
    return all(v in s or any(w in s for w in g.neighbors(v)) for v in range(g.n))


def test_lower_bound_arithmetic():
    assert lower_bound(6, 2) == 25
    assert lower_bound(6, 3) == 27
    assert lower_bound(6, 1) == 24


def test_maximalize_examples():
    g = gen.k33()
    s = maximalize_independent_set(g, set())
    assert s == {0, 1, 2}
    assert maximalize_independent_set(g, s) == s
    p = gen.petersen()
    s = maximalize_independent_set(p, {0})
    assert s == {0, 2, 6} and _neighbor_scan_maximal(p, s)
    with pytest.raises(NotIndependent):
        maximalize_independent_set(g, {0, 3})


def test_orient_base_graph_rules(k33_instance):
    inst = k33_instance
    base = inst.base
    mis = {v for v in range(6) if inst.color(v) == Color.RED}
    og = orient_base_graph(base, inst.coloring, mis)
    assert sorted(og.out_degree(v) for v in range(6)) == [0, 0, 0, 3, 3, 3]
    assert all(v in mis for _, v in og.arcs)
    with pytest.raises(NotMaximal):
        orient_base_graph(base, inst.coloring, {0})
    with pytest.raises(NotIndependent):
        orient_base_graph(base, inst.coloring, {0, 3})


def test_orient_base_graph_follows_colors():
    g = gen.petersen()
    inst = build_from_cubic(g)
    mis = maximalize_independent_set(inst.base, set())
    og = orient_base_graph(inst.base, inst.coloring, mis)
    for u, v in og.arcs:
        if u not in mis and v not in mis:
            assert inst.color(u) < inst.color(v)
    assert all(og.out_degree(v) >= 1 for v in range(g.n) if v not in mis)


def test_cycle_parity_example():
    arcs = orient_cycle(6, {2, 4, 5}, 1)
    assert (1, 0) in arcs
    assert len(arcs) == 6


def test_choose_root_examples():
    assert choose_root(1, 2) == 1
    assert choose_root(0, 3) == 0
    assert choose_root(2, 5) == 0


def test_extend_orientation_invariants(cubic_graph):
    inst = build_from_cubic(cubic_graph)
    n = inst.n
    mis = maximalize_independent_set(inst.base, set())
    og = orient_base_graph(inst.base, inst.coloring, mis)
    orient, data = extend_orientation(inst, og)
    for i in range(n):
        if og.out_degree(i) == 2:
            assert (i, n + i) in orient.arcs and orient.out_degree(i) == 3
        else:
            assert (n + i, i) in orient.arcs
    assert all(orient.out_degree(i) in (0, 1, 3) for i in range(n))
    assert all(inst.color(i) != Color.RED for i in data.members)
    n2 = sum(1 for i in range(n) if og.out_degree(i) == 2)
    assert sum(1 for i in range(n) if orient.out_degree(n + i) == 0) >= n2 // 2
    assert orient.reachable_from(n + data.root) == set(range(2 * n))
    assert all(orient.out_degree(v) == 0 for v in mis)


def test_extend_orientation_rejects_foreign_orientation(k33_instance, prism_instance):
    og = orient_base_graph(prism_instance.base, prism_instance.coloring,
                           maximalize_independent_set(prism_instance.base, set()))
    with pytest.raises(InconsistentOrientation):
        extend_orientation(k33_instance, og)


def test_forward_examples(k33_instance, prism_instance):
    _, w = max_independent_set(k33_instance.base)
    t = tree_from_independent_set(k33_instance, w)
    assert len(t.weighted_leaves()) >= 27
    _, w = max_independent_set(prism_instance.base)
    assert len(w) == 2
    t = tree_from_independent_set(prism_instance, w)
    assert len(t.weighted_leaves()) >= 25


def test_forward_rejects_dependent_sets(k33_instance):
    with pytest.raises(NotIndependent):
        tree_from_independent_set(k33_instance, {0, 3})


def _random_independent(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    chosen = set()
    for v in order[: rng.randint(0, g.n)]:
        if not any(w in chosen for w in g.neighbors(v)):
            chosen.add(v)
    return chosen


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([6, 8, 10, 12, 14, 18]), seed=st.integers(0, 100_000))
def test_forward_bound_property(n, seed):
    g = gen.random_cubic(n, seed)
    inst = build_from_cubic(g)
    chosen = _random_independent(inst.base, random.Random(seed))
    r = synthesize_tree(inst, chosen)
    assert is_maximal_independent(inst.base, r.independent_set)
    assert r.independent_set >= chosen
    assert r.leaves == len(r.tree.weighted_leaves())
    assert r.leaves >= r.structural_bound
    assert r.leaves >= lower_bound(n, len(r.independent_set)) >= lower_bound(n, len(chosen))
    assert r.out_profile.get(2, 0) == 0
