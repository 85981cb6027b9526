"""From a spanning tree of the instance back to an independent set, with an audit
of every counting step that bounds the tree's weighted leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import AuditFailed, MalformedOutTree, NoNonLeafConnection, NotSpanningTree
from .gadgets import EXPECTED_BOUNDS
from .graph import Orientation, OutTree, SpanningTree, is_independent, orient_out_tree
from .instance import WeightedInstance, terminal_of


def upper_bound(n: int, size: int) -> int:
    """ceil(3.75 n + 1.5 size), computed exactly."""
    return -((-(15 * n + 6 * size)) // 4)


def guaranteed_size(n: int, leaves: int) -> int:
    """Smallest |I| compatible with ``leaves <= upper_bound(n, |I|)``."""
    return max(0, -((-(4 * leaves - 15 * n - 2)) // 6))


def pick_nonleaf_connection_root(inst: WeightedInstance, t: SpanningTree) -> int:
    if t.host != inst.graph:
        raise NotSpanningTree("tree does not span the instance graph")
    for i in range(inst.n):
        c = inst.connection(i)
        if t.degree(c) >= 2:
            return c
    raise NoNonLeafConnection("every connection vertex is a leaf")


def induce_orientation(inst: WeightedInstance, ot: OutTree) -> tuple[Orientation, Orientation]:
    """Orient each augmented edge by the side its subdivision vertex is entered from.

    Returns the orientation of the augmented graph and its restriction to the base.
    """
    if inst.connection_index(ot.root) is None:
        raise MalformedOutTree(f"root {ot.root} is not a connection vertex")
    if ot.tree.host != inst.graph:
        raise MalformedOutTree("out-tree is not over the instance graph")
    parent = ot.parent
    arcs = []
    for (u, v), s in inst.subdivision.items():
        p = parent[s]
        if p == terminal_of(inst, u, (u, v)):
            arcs.append((u, v))
        elif p == terminal_of(inst, v, (u, v)):
            arcs.append((v, u))
        else:
            raise MalformedOutTree(f"subdivision vertex {s} has no in-arc from its terminals")
    orient = Orientation(inst.augmented.graph, frozenset(arcs))
    return orient, orient.restrict(inst.base)


def extract_independent_set(og: Orientation) -> frozenset[int]:
    return frozenset(v for v in range(og.host.n) if og.out_degree(v) == 0)


@dataclass(frozen=True)
class DiagnosticCounts:
    n: int
    n_out: tuple[int, ...]  # n_d, d = 0..3, out-degrees in the base graph
    n_out_aug: tuple[int, ...]  # n'_d, d = 0..4, out-degrees of v_i in the augmented graph
    z: int  # connection vertices entered by their spoke
    k: tuple[int, ...]  # k_d, d = 0..3: vertices whose out-degree rises from d to d+1
    m: int

    def identities(self) -> list[tuple[str, bool]]:
        n = self.n
        n0, n1, n2, _ = self.n_out
        p = self.n_out_aug
        k = self.k
        shifted = all(p[d] == self.n_out[d] - k[d] + (k[d - 1] if d else 0) for d in range(4))
        return [
            ("sum n_d = n", sum(self.n_out) == n),
            ("sum n'_d = n", sum(p) == n),
            ("n'_4 = 0", p[4] == 0),
            ("m = 3n_0 + 2n_1 + n_2", self.m == 3 * n0 + 2 * n1 + n2 and 2 * self.m == 3 * n),
            ("z = k_0 + k_1 + k_2", self.z == k[0] + k[1] + k[2]),
            ("n'_d = n_d - k_d + k_(d-1)", shifted),
            ("spoke balance: z + 3n'_0 + 2n'_1 + n'_2 = 3n_0 + 2n_1 + n_2",
             self.z + 3 * p[0] + 2 * p[1] + p[2] == 3 * n0 + 2 * n1 + n2),
        ]


def diagnostic_counts(inst: WeightedInstance, og_aug: Orientation) -> DiagnosticCounts:
    n = inst.n
    base_out = [0] * n
    for u, v in og_aug.arcs:
        if u < n and v < n:
            base_out[u] += 1
    aug_out = [og_aug.out_degree(i) for i in range(n)]
    raised = [i for i in range(n) if aug_out[i] == base_out[i] + 1]
    return DiagnosticCounts(
        n=n,
        n_out=tuple(base_out.count(d) for d in range(4)),
        n_out_aug=tuple(aug_out.count(d) for d in range(5)),
        z=sum(1 for i in range(n) if (i, n + i) in og_aug.arcs),
        k=tuple(sum(1 for i in raised if base_out[i] == d) for d in range(4)),
        m=inst.base.m,
    )


@dataclass(frozen=True)
class AuditReport:
    counts: DiagnosticCounts
    leaves: int
    gadget_leaves: tuple[int, ...]
    connection_leaves: int
    independent_set_size: int
    chain: tuple[Fraction, ...]  # successive upper bounds on the leaf count
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def exact_value(self) -> Fraction:
        """3.75 n + 1.5 |I| as an exact rational."""
        n = self.counts.n
        return Fraction(15 * n + 6 * self.independent_set_size, 4)

    @property
    def half_integral(self) -> bool:
        return (2 * self.exact_value).denominator == 1

    @property
    def slack(self) -> Fraction:
        """Rounding slack ceil(v) - v; at most 1/2 when v is half-integral."""
        v = self.exact_value
        return ceil(v) - v

    def lines(self) -> list[str]:
        out = [f"weighted leaves: {self.leaves}",
               f"independent set size: {self.independent_set_size}",
               "chain: " + " <= ".join(str(x) for x in self.chain),
               f"3.75n + 1.5|I| = {self.exact_value} (half-integral: {self.half_integral}, slack {self.slack})"]
        out += [f"{name}: {'PASS' if ok else 'FAIL'}" for name, ok in self.checks]
        return out


def audit_bound(inst: WeightedInstance, t: SpanningTree, og_aug: Orientation, i: frozenset[int],
                strict: bool = True) -> AuditReport:
    """Recompute every count behind the upper bound on weighted leaves.

    With ``strict`` the first failed check raises :class:`AuditFailed`.
    """
    n = inst.n
    counts = diagnostic_counts(inst, og_aug)
    weighted = set(t.weighted_leaves())
    gadget_leaves = tuple(sum(1 for v in inst.gadget_vertices(g) if v in weighted) for g in range(n))
    conn_leaves = sum(1 for g in range(n) if inst.connection(g) in weighted)
    leaves = len(weighted)
    p = counts.n_out_aug
    n0, n1, n2, _ = counts.n_out
    z = counts.z
    size = len(i)

    gadget_cap = 6 * p[0] + 4 * p[1] + 3 * p[2] + 3 * p[3]
    chain = (
        Fraction(leaves),
        Fraction(gadget_cap + ceil(Fraction(z, 2))),
        Fraction(ceil(3 * n + Fraction(3, 2) * size + Fraction(3, 2) * p[0] + p[1] + Fraction(z, 2))),
        Fraction(ceil(3 * n + Fraction(3, 2) * size + Fraction(3, 2) * n0 + n1 + Fraction(n2, 2))),
        Fraction(upper_bound(n, size)),
    )
    per_gadget = all(
        gadget_leaves[g] <= EXPECTED_BOUNDS[min(og_aug.out_degree(g), 2)] for g in range(n))
    checks = [
        ("independent", is_independent(inst.base, i)),
        ("set is the out-degree-0 vertices", i == extract_independent_set(og_aug.restrict(inst.base))),
        ("leaves split into gadget and connection leaves", leaves == sum(gadget_leaves) + conn_leaves),
        ("per-gadget leaf bound 6/4/3", per_gadget),
        ("gadget leaves <= 6n'_0 + 4n'_1 + 3n'_2 + 3n'_3", sum(gadget_leaves) <= gadget_cap),
        ("connection leaves <= ceil(z/2)", 2 * conn_leaves <= z + 1),
        *counts.identities(),
        ("chain is monotone", all(a <= b for a, b in zip(chain, chain[1:]))),
        ("final bound: leaves <= ceil(3.75n + 1.5|I|)", leaves <= upper_bound(n, size)),
        ("half-integral target", (15 * n + 6 * size) % 2 == 0),
    ]
    report = AuditReport(counts, leaves, gadget_leaves, conn_leaves, size, chain, tuple(checks))
    if strict:
        for name, ok in checks:
            if not ok:
                raise AuditFailed(name, "; ".join(report.lines()))
    return report


@dataclass(frozen=True)
class BackwardResult:
    root: int
    out_tree: OutTree
    orientation: Orientation
    base_orientation: Orientation
    independent_set: frozenset[int]  # base ids
    audit: AuditReport


def set_from_tree(inst: WeightedInstance, t: SpanningTree, strict: bool = True) -> BackwardResult:
    """Root, orient, extract and audit in one call."""
    if t.host != inst.graph:
        t = SpanningTree(inst.graph, t.tree_edges)
    root = pick_nonleaf_connection_root(inst, t)
    ot = orient_out_tree(t, root)
    og_aug, og = induce_orientation(inst, ot)
    i = extract_independent_set(og)
    report = audit_bound(inst, t, og_aug, i, strict=strict)
    return BackwardResult(root, ot, og_aug, og, i, report)
