"""Exact combinatorics of perfect clique packings and equitable colourings:
closed-form edge thresholds, extremal constructions, exact decision solvers,
and exhaustive/sampled empirical verification.

The two viewpoints are linked throughout by complementation: a graph has a
perfect packing by r-cliques exactly when its complement admits an equitable
colouring with n/r colours, and the edge thresholds on the two sides add up
to C(n, 2).
"""

from .errors import (
    CapExceededError,
    Graph6Error,
    HypothesisError,
    PacklabError,
    ParameterRangeError,
)
from .formats import (
    decode_graph6,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph,
)
from .graph import (
    ColouringCertificate,
    Graph,
    PackingCertificate,
    complement,
    complete_multipartite,
    degree_sequence,
    disjoint_union,
    t_star,
    turan_complement,
    turan_graph,
    turan_sizes,
    validate_colouring,
    validate_packing,
)
from .thresholds import (
    ThresholdValue,
    colouring_threshold,
    duality_check,
    first_branch_regime,
    matching_blocker_edges,
    matching_threshold,
    packing_threshold,
    second_branch_bound_decreasing,
    second_branch_lower_bound,
    turan_complement_edges,
    turan_edges,
)
from .solvers import (
    SolveOutcome,
    chvatal_hampath_condition,
    equitable_colouring,
    hajnal_szemeredi_guarantee,
    hamilton_path_exact,
    krfree_greedy_packing,
    perfect_kr_packing,
    perfect_matching,
    square_hamilton_obstructions,
    turan_partition,
)
from .constructions import (
    FAMILIES,
    build_clique_plus_isolates,
    build_extremal1,
    build_extremal2,
    build_matching_blocker,
    build_packing_exception,
    build_square_blocker,
    build_star_plus_cliques,
    expected_degree_bands,
    expected_edges,
)
from .verify import (
    EnumerationTask,
    VerificationReport,
    audit_constructions,
    audit_instance,
    banded_condition_profile,
    conjecture1_search,
    disjunctive_condition_failures,
    question1_search,
    sweep_hampath_condition,
    verify_mainthm1_threshold,
    verify_matching_threshold,
    verify_t1_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ColouringCertificate",
    "EnumerationTask",
    "FAMILIES",
    "Graph",
    "Graph6Error",
    "HypothesisError",
    "PackingCertificate",
    "PacklabError",
    "ParameterRangeError",
    "SolveOutcome",
    "ThresholdValue",
    "VerificationReport",
    "audit_constructions",
    "audit_instance",
    "banded_condition_profile",
    "build_clique_plus_isolates",
    "build_extremal1",
    "build_extremal2",
    "build_matching_blocker",
    "build_packing_exception",
    "build_square_blocker",
    "build_star_plus_cliques",
    "chvatal_hampath_condition",
    "colouring_threshold",
    "complement",
    "complete_multipartite",
    "conjecture1_search",
    "decode_graph6",
    "degree_sequence",
    "disjoint_union",
    "disjunctive_condition_failures",
    "duality_check",
    "encode_graph6",
    "equitable_colouring",
    "expected_degree_bands",
    "expected_edges",
    "first_branch_regime",
    "format_edge_list",
    "hajnal_szemeredi_guarantee",
    "hamilton_path_exact",
    "krfree_greedy_packing",
    "matching_blocker_edges",
    "matching_threshold",
    "packing_threshold",
    "parse_edge_list",
    "parse_graph",
    "perfect_kr_packing",
    "perfect_matching",
    "question1_search",
    "second_branch_bound_decreasing",
    "second_branch_lower_bound",
    "square_hamilton_obstructions",
    "sweep_hampath_condition",
    "t_star",
    "turan_complement",
    "turan_complement_edges",
    "turan_edges",
    "turan_graph",
    "turan_partition",
    "turan_sizes",
    "validate_colouring",
    "validate_packing",
    "verify_mainthm1_threshold",
    "verify_matching_threshold",
    "verify_t1_threshold",
]
