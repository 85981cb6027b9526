from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxleaf import generators as gen
from maxleaf.backward import (
    audit_bound,
    diagnostic_counts,
    extract_independent_set,
    guaranteed_size,
    induce_orientation,
    pick_nonleaf_connection_root,
    set_from_tree,
    upper_bound,
)
from maxleaf.errors import AuditFailed, Disconnected, MalformedOutTree, NotSpanningTree
from maxleaf.forward import synthesize_tree
from maxleaf.graph import Orientation, break_cycles, SpanningTree, is_independent, orient_out_tree, perturb_tree, random_spanning_tree
from maxleaf.instance import build_from_cubic
from maxleaf.oracles import max_independent_set


def test_bound_arithmetic():
    assert upper_bound(6, 1) == 24
    assert upper_bound(6, 2) == 26
    assert upper_bound(6, 3) == 27
    assert guaranteed_size(6, 24) == 1
    assert guaranteed_size(6, 27) == 3
    assert guaranteed_size(6, 0) == 0
    # |I| >= x - 1/3 for every real x with leaves >= 3.75n + 1.5x
    for n in (6, 8, 10):
        for leaves in range(0, 13 * n):
            x = (Fraction(leaves) - Fraction(15 * n, 4)) / Fraction(3, 2)
            assert guaranteed_size(n, leaves) >= x - Fraction(1, 3)


def _tree_where(inst, pred, seed=0):
    rng = random.Random(seed)
    for _ in range(5000):
        t = random_spanning_tree(inst.graph, rng)
        if pred(t):
            return t
    raise AssertionError("no tree found")


def test_root_choice(k33_instance):
    inst = k33_instance
    c = inst.connection
    t = _tree_where(inst, lambda t: t.degree(c(0)) >= 2)
    assert pick_nonleaf_connection_root(inst, t) == c(0)
    # keep only the spoke edge at c_0, then reduce to a tree (leaves stay leaves)
    n = inst.n
    spoke = inst.subdivision[(0, n)]
    edges = {e for e in inst.graph.edges if c(0) not in e or spoke in e}
    t = break_cycles(inst.graph, edges)
    assert t.degree(c(0)) == 1 and t.degree(c(1)) >= 2
    assert pick_nonleaf_connection_root(inst, t) == c(1)


def test_adjacent_connections_are_never_both_leaves(k33_instance):
    # the subdivision vertex between them would be cut off together with one of them
    inst = k33_instance
    n = inst.n
    c = inst.connection
    s01 = inst.subdivision[(n, n + 1)]
    for keep0 in inst.graph.neighbors(c(0)):
        for keep1 in inst.graph.neighbors(c(1)):
            edges = {e for e in inst.graph.edges
                     if not (c(0) in e and keep0 not in e) and not (c(1) in e and keep1 not in e)}
            with pytest.raises(Disconnected):
                break_cycles(inst.graph, edges)
    assert s01 in inst.graph.neighbors(c(0))


def test_all_leaf_connections_cannot_form_a_tree(k33_instance):
    inst = k33_instance
    t = random_spanning_tree(inst.graph, random.Random(3))
    edges = set(t.tree_edges)
    for i in range(inst.n):
        inc = sorted(e for e in edges if inst.connection(i) in e)
        edges -= set(inc[1:])
    with pytest.raises(NotSpanningTree):
        SpanningTree(inst.graph, frozenset(edges))


def test_induced_orientation_sides(k33_instance):
    inst = k33_instance
    t = random_spanning_tree(inst.graph, random.Random(1))
    root = pick_nonleaf_connection_root(inst, t)
    ot = orient_out_tree(t, root)
    og_aug, og = induce_orientation(inst, ot)
    assert og.host == inst.base
    for (u, v), s in inst.subdivision.items():
        parent = ot.parent[s]
        tail = u if (u, v) in og_aug.arcs else v
        assert parent in inst.graph.neighbors(s)
        assert (tail == u) == ((u, v) in og_aug.arcs)
    assert all(og_aug.out_degree(i) <= 3 for i in range(inst.n))


def test_induce_needs_connection_root(k33_instance):
    t = random_spanning_tree(k33_instance.graph, random.Random(2))
    with pytest.raises(MalformedOutTree):
        induce_orientation(k33_instance, orient_out_tree(t, 0))


def test_extract_from_cyclic_orientation_is_empty():
    c4 = gen.cycle(4)
    og = Orientation(c4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)[::-1]}))
    assert extract_independent_set(og) == frozenset()


def test_tree_with_24_leaves_gives_nonempty_set(k33_instance):
    inst = k33_instance
    _, w = max_independent_set(inst.base)
    start = synthesize_tree(inst, w).tree
    rng = random.Random(7)
    t = start
    while len(t.weighted_leaves()) != 24:
        t = perturb_tree(start, rng, swaps=rng.randint(1, 4))
    result = set_from_tree(inst, t)
    assert len(result.independent_set) >= 1


def test_round_trip_k33(k33_instance):
    inst = k33_instance
    _, w = max_independent_set(inst.base)
    fr = synthesize_tree(inst, w)
    back = set_from_tree(inst, fr.tree)
    assert len(back.independent_set) == 3
    assert back.audit.leaves == 27
    assert back.audit.chain == tuple(Fraction(27) for _ in range(5))
    assert back.audit.half_integral and back.audit.slack == 0


def test_audit_rejects_wrong_set(k33_instance):
    inst = k33_instance
    t = random_spanning_tree(inst.graph, random.Random(5))
    result = set_from_tree(inst, t)
    wrong = frozenset(set(range(inst.n)) - result.independent_set)
    with pytest.raises(AuditFailed) as info:
        audit_bound(inst, t, result.orientation, wrong)
    assert info.value.claim
    report = audit_bound(inst, t, result.orientation, wrong, strict=False)
    assert not report.passed


@settings(max_examples=60, deadline=None)
@given(n=st.sampled_from([6, 8, 10]), seed=st.integers(0, 100_000), mode=st.sampled_from(["random", "perturb"]))
def test_audit_holds_on_random_trees(n, seed, mode):
    g = gen.random_cubic(n, seed)
    inst = build_from_cubic(g)
    rng = random.Random(seed)
    if mode == "random":
        t = random_spanning_tree(inst.graph, rng)
    else:
        _, w = max_independent_set(inst.base)
        t = perturb_tree(synthesize_tree(inst, w).tree, rng, swaps=rng.randint(1, 20))
    result = set_from_tree(inst, t)
    assert result.audit.passed
    assert is_independent(inst.base, result.independent_set)
    counts = diagnostic_counts(inst, result.orientation)
    assert counts.n_out_aug[4] == 0
    assert counts.z + 3 * counts.n_out_aug[0] + 2 * counts.n_out_aug[1] + counts.n_out_aug[2] == \
        3 * counts.n_out[0] + 2 * counts.n_out[1] + counts.n_out[2]
    leaves = len(t.weighted_leaves())
    assert leaves <= upper_bound(n, len(result.independent_set))
    assert len(result.independent_set) >= guaranteed_size(n, leaves)
