"""String-network shortest paths: physical lift/pull simulations, their
symbolic search counterparts, and exact closed-form cost verification."""

from .continuous import LiftoffEvent, LiftoffSchedule, PullApartResult, liftoff_schedule, pull_apart
from .errors import GenerationFailed, NonUniform, ParseError, StringliftError, Unreachable
from .formulas import (
    ComplexityReport,
    check_correspondence,
    enumeration_bfs_time,
    node_model_work,
    set_bfs_time,
    string_model_work,
)
from .generators import GeneratorSpec, generate
from .lift import LiftResult, LiftState, LiftStep, LiftTrace, grab, hanging_path, lift_step, run_lift
from .netio import format_rational, parse_network, parse_rational, read_network, write_network
from .network import (
    CostParams,
    LayerDecomposition,
    StringEdge,
    StringNetwork,
    ValidationReport,
    Violation,
    adjacency,
    all_degrees,
    degree,
    detect_uniform_length,
    hop_layers,
    validate,
)
from .search import BfsRun, DijkstraRun, dijkstra, enumerating_bfs, marked_bfs, naive_set_bfs
from .verify import BatchFailure, BatchReport, verify_batch, verify_network

__all__ = [
    "BatchFailure",
    "BatchReport",
    "BfsRun",
    "ComplexityReport",
    "CostParams",
    "DijkstraRun",
    "GenerationFailed",
    "GeneratorSpec",
    "LayerDecomposition",
    "LiftResult",
    "LiftState",
    "LiftStep",
    "LiftTrace",
    "LiftoffEvent",
    "LiftoffSchedule",
    "NonUniform",
    "ParseError",
    "PullApartResult",
    "StringEdge",
    "StringNetwork",
    "StringliftError",
    "Unreachable",
    "ValidationReport",
    "Violation",
    "adjacency",
    "all_degrees",
    "check_correspondence",
    "degree",
    "detect_uniform_length",
    "dijkstra",
    "enumerating_bfs",
    "enumeration_bfs_time",
    "format_rational",
    "generate",
    "grab",
    "hanging_path",
    "hop_layers",
    "lift_step",
    "liftoff_schedule",
    "marked_bfs",
    "naive_set_bfs",
    "node_model_work",
    "parse_network",
    "parse_rational",
    "pull_apart",
    "read_network",
    "run_lift",
    "set_bfs_time",
    "string_model_work",
    "validate",
    "verify_batch",
    "verify_network",
    "write_network",
]
