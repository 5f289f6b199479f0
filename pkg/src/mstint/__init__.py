"""MST interdiction toolkit: exact minimum-cost increase, greedy
budget/profit approximations with certified guarantees, and protection.
"""
from .budget import (
    InfeasibleError,
    budget_approximate,
    budget_approximate_fast,
    reduce_budget_range,
)
from .cuts import CutResult, enumerate_min_st_cuts, global_min_cut, min_st_cut
from .eps import NoFiniteCutError, eps_increase
from .generators import gen_bad_example, gen_random
from .graph import Candidate, Edge, Graph, ParseError, parse_instance, parse_instance_full, serialize_instance
from .mst import (
    DisconnectedGraphError,
    PartialCutSpec,
    SpanningForest,
    is_connected,
    mst,
    partial_cut,
    profit,
)
from .oracle import (
    InfeasibleOracleError,
    OracleSizeError,
    oracle_budget,
    oracle_eps,
    oracle_profit,
)
from .profit import best_single_cut, profit_approximate
from .protection import (
    OptimalCutListing,
    ProtectionInstance,
    UncoverableCutError,
    list_optimal_cuts,
    protect,
)
from .quantities import (
    INFINITY,
    SCALE,
    ExtendedValue,
    finite,
    format_quantity,
    parse_quantity,
)
from .relaxation import RelaxationCertificate, build_cut_sequence, certify
from .solution import InterdictionSolution, serialize_solution, solution_record

__all__ = [
    "INFINITY",
    "SCALE",
    "Candidate",
    "CutResult",
    "DisconnectedGraphError",
    "Edge",
    "ExtendedValue",
    "Graph",
    "InfeasibleError",
    "InfeasibleOracleError",
    "InterdictionSolution",
    "NoFiniteCutError",
    "OptimalCutListing",
    "OracleSizeError",
    "ParseError",
    "PartialCutSpec",
    "ProtectionInstance",
    "RelaxationCertificate",
    "SpanningForest",
    "UncoverableCutError",
    "best_single_cut",
    "budget_approximate",
    "budget_approximate_fast",
    "build_cut_sequence",
    "certify",
    "enumerate_min_st_cuts",
    "eps_increase",
    "finite",
    "format_quantity",
    "gen_bad_example",
    "gen_random",
    "global_min_cut",
    "is_connected",
    "list_optimal_cuts",
    "min_st_cut",
    "mst",
    "oracle_budget",
    "oracle_eps",
    "oracle_profit",
    "parse_instance",
    "parse_instance_full",
    "parse_quantity",
    "partial_cut",
    "profit",
    "profit_approximate",
    "protect",
    "reduce_budget_range",
    "serialize_instance",
    "serialize_solution",
    "solution_record",
]
