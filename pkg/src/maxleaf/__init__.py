"""Executable reduction from cubic independent set to cubic max-leaf spanning tree.

The modules follow the data flow: ``graph`` and ``coloring`` supply the
primitives, ``gadgets`` certifies the building blocks, ``instance`` builds the
weighted instance and its cubic expansion, ``forward`` and ``backward`` map
between independent sets and spanning trees, ``oracles`` provides exact ground
truth, and ``companions`` holds the vertex cover and dominating set transfers.
"""

from .backward import audit_bound, extract_independent_set, set_from_tree, upper_bound
from .coloring import Color, normalize_coloring, three_color
from .companions import mis_pipeline, mis_ratio_transfer, tree_from_cds, vc_to_maxleaf
from .errors import MaxLeafError
from .forward import lower_bound, synthesize_tree, tree_from_independent_set
from .graph import Graph, Orientation, SpanningTree
from .instance import build_from_cubic, build_weighted_instance, expand_degree_two

__all__ = [
    "Color",
    "Graph",
    "MaxLeafError",
    "Orientation",
    "SpanningTree",
    "audit_bound",
    "build_from_cubic",
    "build_weighted_instance",
    "expand_degree_two",
    "extract_independent_set",
    "lower_bound",
    "mis_pipeline",
    "mis_ratio_transfer",
    "normalize_coloring",
    "set_from_tree",
    "synthesize_tree",
    "three_color",
    "tree_from_cds",
    "tree_from_independent_set",
    "upper_bound",
    "vc_to_maxleaf",
]
