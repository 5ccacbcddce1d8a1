"""Exact and Monte Carlo analysis of randomized Boolean gossip dynamics.

A graph of agents holding single bits evolves by repeatedly activating a
uniformly random edge and rewriting both endpoint bits through a randomly
drawn pair of two-argument Boolean operators. This package builds the
induced Markov chain on bit vectors exactly, classifies its communication
structure, decides absorption, solves for absorption probabilities, and
cross-checks every closed form against brute force and simulation.
"""

from .absorbing import (
    StateClass,
    absorbing_rows,
    check_graph_independence,
    classify_state,
    is_absorbing_chain_oracle,
    is_absorbing_state,
)
from .andor import (
    ClassPrediction,
    ReducedState,
    consensus_probability,
    cycle_reduce,
    line_reduce,
    predict_chi,
    predict_classes,
)
from .chain import (
    ChainAnalysis,
    ChainSpec,
    TransitionRow,
    absorption_probabilities,
    analyze,
    export_csv,
    export_dot,
    format_state,
    parse_state,
    step_pair,
    sweep_absorbing_verdicts,
    transition_row,
)
from .errors import (
    CapacityError,
    ConstructionError,
    GossipError,
    ParseError,
    PreconditionError,
    SolverError,
)
from .graphs import (
    Graph,
    GraphShape,
    ShapeTag,
    bipartition,
    classify_shape,
    has_odd_cycle,
    is_connected,
    make,
    parse_edge_list,
    serialize_edge_list,
)
from .meanfield import (
    DensityTrajectory,
    MeanFieldParams,
    closed_form,
    closed_form_trajectory,
    recursion,
    to_csv,
)
from .rules import (
    AND_OR,
    NEIGHBOR_COPY,
    ONE_STABLE,
    OPS,
    OP_AND,
    OP_DIFF,
    OP_FALSE,
    OP_FIRST,
    OP_IMPLIED_BY,
    OP_NOT_SECOND,
    OP_OR,
    OP_TRUE,
    OP_XOR,
    PARITY_FAMILIES,
    RuleSet,
    SPLIT_STABLE,
    ZERO_STABLE,
    all_rule_sets,
    evaluate,
    format_rules,
    is_inverter_family,
    is_parity_family,
    is_split_pair_family,
    mask_ops,
    ops_mask,
    parse_probs,
    parse_rules,
    truth_table,
)
from .simulate import SimConfig, SimResult, run

__version__ = "0.1.0"

__all__ = [
    "AND_OR",
    "CapacityError",
    "ChainAnalysis",
    "ChainSpec",
    "ClassPrediction",
    "ConstructionError",
    "DensityTrajectory",
    "GossipError",
    "Graph",
    "GraphShape",
    "MeanFieldParams",
    "NEIGHBOR_COPY",
    "ONE_STABLE",
    "OPS",
    "OP_AND",
    "OP_DIFF",
    "OP_FALSE",
    "OP_FIRST",
    "OP_IMPLIED_BY",
    "OP_NOT_SECOND",
    "OP_OR",
    "OP_TRUE",
    "OP_XOR",
    "PARITY_FAMILIES",
    "ParseError",
    "PreconditionError",
    "ReducedState",
    "RuleSet",
    "SPLIT_STABLE",
    "ShapeTag",
    "SimConfig",
    "SimResult",
    "SolverError",
    "StateClass",
    "TransitionRow",
    "ZERO_STABLE",
    "absorbing_rows",
    "absorption_probabilities",
    "all_rule_sets",
    "analyze",
    "bipartition",
    "check_graph_independence",
    "classify_shape",
    "classify_state",
    "closed_form",
    "closed_form_trajectory",
    "consensus_probability",
    "cycle_reduce",
    "evaluate",
    "export_csv",
    "export_dot",
    "format_state",
    "format_rules",
    "has_odd_cycle",
    "is_absorbing_chain_oracle",
    "is_absorbing_state",
    "is_connected",
    "is_inverter_family",
    "is_parity_family",
    "is_split_pair_family",
    "line_reduce",
    "make",
    "mask_ops",
    "ops_mask",
    "parse_edge_list",
    "parse_probs",
    "parse_rules",
    "parse_state",
    "predict_chi",
    "predict_classes",
    "recursion",
    "run",
    "serialize_edge_list",
    "step_pair",
    "sweep_absorbing_verdicts",
    "to_csv",
    "transition_row",
    "truth_table",
]
