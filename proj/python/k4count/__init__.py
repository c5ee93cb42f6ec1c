"""Exact enumeration, counting, and verification of K4 subdivisions."""

from ._core import (
    DEFAULT_CAP,
    ApexInstance,
    FixedInstance,
    Graph,
    NotTwoConnected,
    ParseError,
    WeightedInstance,
    apex_census,
    bound_report,
    build_apex_instance,
    build_fixed_instance,
    build_weighted_instance,
    complete,
    complete_bipartite,
    count_cycles,
    count_fixed_subdivisions,
    count_k4,
    count_st_paths,
    cycle_bound_from_ears,
    cycle_bound_from_nm,
    cycle_bound_min_degree,
    cycle_graph,
    cycle_sum_bound,
    disjoint_st_paths,
    enumerate_cycles,
    enumerate_k4,
    fan_paths,
    gadget_chain,
    is_connected,
    is_k4_subdivision,
    is_k_connected,
    k4_from_cycle,
    k4_from_cycle_pinned,
    marker_census,
    max_apexes_bound,
    open_ear_decomposition,
    p_falling,
    parse_graph,
    phi_lower_cubic,
    phi_lower_dense,
    phi_upper_wheel,
    prism,
    random_2connected,
    random_3connected,
    recover_fixed_count,
    star_bound,
    vandermonde_recover,
    verify_ears,
    weighted_total_from_census,
    wheel,
    whitney_ear_count,
)

__all__ = [
    "DEFAULT_CAP",
    "ApexInstance",
    "FixedInstance",
    "Graph",
    "NotTwoConnected",
    "ParseError",
    "WeightedInstance",
    "apex_census",
    "bound_report",
    "build_apex_instance",
    "build_fixed_instance",
    "build_weighted_instance",
    "complete",
    "complete_bipartite",
    "count_cycles",
    "count_fixed_subdivisions",
    "count_k4",
    "count_st_paths",
    "cycle_bound_from_ears",
    "cycle_bound_from_nm",
    "cycle_bound_min_degree",
    "cycle_graph",
    "cycle_sum_bound",
    "disjoint_st_paths",
    "enumerate_cycles",
    "enumerate_k4",
    "fan_paths",
    "gadget_chain",
    "is_connected",
    "is_k4_subdivision",
    "is_k_connected",
    "k4_from_cycle",
    "k4_from_cycle_pinned",
    "marker_census",
    "max_apexes_bound",
    "open_ear_decomposition",
    "p_falling",
    "parse_graph",
    "phi_lower_cubic",
    "phi_lower_dense",
    "phi_upper_wheel",
    "prism",
    "random_2connected",
    "random_3connected",
    "recover_fixed_count",
    "star_bound",
    "vandermonde_recover",
    "verify_ears",
    "weighted_total_from_census",
    "wheel",
    "whitney_ear_count",
]

__version__ = "0.1.0"
