"""Key qualities for the k vertex-disjoint directed paths problem on d-path-dominant digraphs."""

from .digraph import (
    Digraph,
    format_graph,
    is_d_path_dominant,
    is_inward,
    is_minimal_path,
    is_outward,
    is_semicomplete,
    parse_graph,
)
from .errors import (
    BudgetExceeded,
    InvalidInputError,
    InvariantViolation,
    KvdpError,
    NotFoundError,
    ParseError,
    PreconditionError,
)
from .pareto import ParetoSet, dominated, minimal_set, reconstruct_witness, vector_shortest_paths
from .rails import (
    ProblemInstance,
    Rail,
    compute_A,
    compute_B,
    confusion,
    enumerate_rails,
    format_instance,
    parse_instance,
    rail_arrow,
    validate_linkage,
)
from .solver import SolveResult, SolverParams, has_bounded_linkage, has_linkage, key_qualities
from .tracker import Tracker, build_tracker, dump_tracker, trace_path

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Digraph", "InvalidInputError", "InvariantViolation", "KvdpError",
    "NotFoundError", "ParetoSet", "ParseError", "PreconditionError", "ProblemInstance", "Rail",
    "SolveResult", "SolverParams", "Tracker", "build_tracker", "compute_A", "compute_B",
    "confusion", "dominated", "dump_tracker", "enumerate_rails", "format_graph",
    "format_instance", "has_bounded_linkage", "has_linkage", "is_d_path_dominant", "is_inward",
    "is_minimal_path", "is_outward", "is_semicomplete", "key_qualities", "minimal_set",
    "parse_graph", "parse_instance", "rail_arrow", "reconstruct_witness", "trace_path",
    "validate_linkage", "vector_shortest_paths",
]
