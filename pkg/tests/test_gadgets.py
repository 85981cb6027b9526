from __future__ import annotations

import pytest

from maxleaf.errors import CertificationFailed
from maxleaf.gadgets import (
    EXPECTED_BOUNDS,
    LABELS,
    certify_degree2_gadget,
    certify_patterns,
    check_structure,
    default_patterns,
    degree2_gadget,
    evaluate_degree2_canonical,
    evaluate_pattern,
    harness,
    pattern_keys,
    search_patterns,
    verify_gadget_bounds,
    vertex_gadget,
)
from maxleaf.graph import is_connected


def test_vertex_gadget_shape():
    gd = vertex_gadget()
    assert len(gd.labels) == 9 and len(gd.edges) == 11
    assert set(gd.terminals) == {"b", "g", "h", "i"}
    internal_two = [x for x in LABELS if gd.internal_degree(x) == 2 and x not in gd.terminals]
    assert internal_two == ["c"]
    for x in LABELS:
        assert gd.host_degree(x) == (2 if x == "c" else 3)


def test_structure_checks_all_pass():
    results = check_structure(vertex_gadget())
    assert results and all(ok for _, ok in results)


@pytest.mark.parametrize("cut,isolated", [({"b", "f"}, {"c"}), ({"a", "d", "f"}, {"e"})])
def test_named_cuts_isolate(cut, isolated):
    gd = vertex_gadget()
    assert gd.neighbors(next(iter(isolated))) <= cut
    rest = [x for x in LABELS if x not in cut]
    idx = {x: k for k, x in enumerate(rest)}
    edges = [(idx[a], idx[b]) for a, b in gd.edges if a in idx and b in idx]
    assert not is_connected(len(rest), edges)


def test_named_paths():
    gd = vertex_gadget()
    for path in ("bcfi", "ghi"):
        assert all(b in gd.neighbors(a) for a, b in zip(path, path[1:]))


def test_harness_layout():
    h = harness(vertex_gadget())
    assert h.graph.n == 18 and len(h.external) == 9
    assert h.graph.is_connected()


def test_gadget_bounds_exhaustive():
    report = verify_gadget_bounds()
    assert report.trees == 46128
    assert report.max_zero == EXPECTED_BOUNDS[0] == 6
    assert report.max_at_least(1) == 4
    assert report.max_at_least(2) == 3


def test_patterns_match_catalog():
    pats = default_patterns()
    assert set(pats) == set(pattern_keys(vertex_gadget()))
    assert len(pats) == 9
    for key, pat in pats.items():
        assert pat.leaf_yield == {0: 6, 1: 4, 3: 3}[key[0]]


def test_named_candidate_patterns():
    gd = vertex_gadget()
    zero = [("b", "c"), ("c", "f"), ("a", "b"), ("a", "d"), ("a", "e")]
    assert set(evaluate_pattern(gd, zero, (0, frozenset()))) == set("defghi")
    one = [("b", "c"), ("c", "f"), ("f", "i"), ("a", "b"), ("a", "d"), ("e", "f")]
    assert set(evaluate_pattern(gd, one, (1, frozenset("i")))) == set("degh")
    three = [("b", "c"), ("c", "f"), ("f", "i"), ("h", "i"), ("g", "h"), ("a", "b"), ("d", "g"), ("e", "f")]
    assert set(evaluate_pattern(gd, three, (3, frozenset("ghi")))) == set("ade")


def test_search_finds_no_better_pattern():
    gd = vertex_gadget()
    for key in pattern_keys(gd):
        best, _ = search_patterns(gd, key)
        assert best == {0: 6, 1: 4, 3: 3}[key[0]]


def test_certify_patterns_passes():
    report = certify_patterns()
    assert report.passed


def test_degree2_gadget_is_cubic_after_attachment():
    d = degree2_gadget()
    deg = {x: 0 for x in d.labels}
    for a, b in d.edges:
        deg[a] += 1
        deg[b] += 1
    assert deg[d.terminal] == 1
    assert all(deg[x] == 3 for x in d.internal)


def test_degree2_gadget_certification():
    report = certify_degree2_gadget()
    assert report.trees == 96
    assert report.max_internal == 3
    assert not report.terminal_ever_leaf
    assert set(report.by_usage.values()) == {3}
    assert evaluate_degree2_canonical(degree2_gadget()) == 3


def test_broken_gadget_fails_certification():
    gd = vertex_gadget()
    weaker = type(gd)(gd.labels, gd.edges | {("a", "c")} - {("b", "c")}, gd.terminals, gd.degree2_vertex)
    with pytest.raises(CertificationFailed):
        verify_gadget_bounds(weaker)
