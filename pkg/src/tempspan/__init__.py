"""Minimum temporal spanners: data model, reachability, exact and
vertex-cover-parameterized solvers, and hardness-instance generators."""

from .reach import (
    NONSTRICT,
    STRICT,
    ArrivalProfile,
    Strictness,
    TemporalOutTree,
    earliest_arrival,
    foremost_out_tree,
    is_tc,
    reach_matrix,
    verify_out_tree,
)
from .solver import (
    ALL_PAIRS,
    AllPairs,
    SolveResult,
    Template,
    TwoSource,
    VcTreeDecomposition,
    enumerate_templates,
    forced_edges,
    instantiate_template,
    min_spanner_brute,
    min_spanner_exact,
    min_spanner_xp_vc,
    min_vertex_cover,
    select_extra_edges,
    vc_tree_decompose,
)
from .tempgraph import (
    GraphClass,
    Spanner,
    TemporalGraph,
    TimeEdge,
    build,
    classify,
    parse,
    parse_spanner,
    relabel_to_happy,
    serialize,
    serialize_spanner,
    underlying_graph,
)

__all__ = [
    "ALL_PAIRS",
    "AllPairs",
    "ArrivalProfile",
    "GraphClass",
    "NONSTRICT",
    "STRICT",
    "SolveResult",
    "Spanner",
    "Strictness",
    "TemporalGraph",
    "TemporalOutTree",
    "Template",
    "TimeEdge",
    "TwoSource",
    "VcTreeDecomposition",
    "build",
    "classify",
    "earliest_arrival",
    "enumerate_templates",
    "forced_edges",
    "foremost_out_tree",
    "instantiate_template",
    "is_tc",
    "min_spanner_brute",
    "min_spanner_exact",
    "min_spanner_xp_vc",
    "min_vertex_cover",
    "parse",
    "parse_spanner",
    "reach_matrix",
    "relabel_to_happy",
    "select_extra_edges",
    "serialize",
    "serialize_spanner",
    "underlying_graph",
    "vc_tree_decompose",
    "verify_out_tree",
]
