from graphs.graph_ideals import (
    cover_ideal,
    di_ideal,
    minimal_dominating_sets,
    ni_ideal,
    partial_cover_ideal,
    rim_intersection_ideal,
)
from graphs.relation_graph import LinearRelationGraph, linear_relation_graph
from graphs.simple_graph import SimpleGraph, complete_bipartite, cycle, graph_from_json, read_graph
from graphs.transversals import minimal_transversals
from graphs.wheel import HWheelSpec, build_h_wheel, has_consecutive_radial, wheel_decomposition

__all__ = [
    "HWheelSpec",
    "LinearRelationGraph",
    "SimpleGraph",
    "build_h_wheel",
    "complete_bipartite",
    "cover_ideal",
    "cycle",
    "di_ideal",
    "graph_from_json",
    "has_consecutive_radial",
    "linear_relation_graph",
    "minimal_dominating_sets",
    "minimal_transversals",
    "ni_ideal",
    "partial_cover_ideal",
    "read_graph",
    "rim_intersection_ideal",
    "wheel_decomposition",
]
