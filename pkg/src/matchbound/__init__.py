"""Graph matchings with certified lower bounds k >= m/n and k >= 2m/(3d)."""

from .certify import (
    BoundCertificate,
    PerEdgeCheck,
    certify,
    check_lemma1,
    check_lemma2,
    check_theorem1,
    check_theorem2,
)
from .errors import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    InstanceTooLargeError,
    InvalidParameterError,
    LoopEdgeError,
    MatchboundError,
    NotAnEdgeError,
    NotMatchedError,
    NotMaximalError,
    SharedVertexError,
    StaleMoveError,
    VertexOutOfRangeError,
)
from .estimators import ExactMatcher, GreedyMatcher, LocalSearchMatcher, as_graph
from .exact import OracleLimits, exact_max_matching, naive_enumerate_max
from .graph import Graph, GraphFamilySpec, build_graph, generate, parse_edgelist, write_edgelist
from .local_search import SwapMove, apply_swap, find_swap, is_swap_stable, stabilize
from .matching import (
    MatchedEdgeStats,
    Matching,
    edge_stats,
    empty_matching,
    greedy_maximalize,
    is_maximal,
    uncovered_neighbors,
    validate_matching,
    write_matching,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate", "PerEdgeCheck", "certify", "check_lemma1", "check_lemma2",
    "check_theorem1", "check_theorem2",
    "MatchboundError", "LoopEdgeError", "DuplicateEdgeError", "VertexOutOfRangeError",
    "InvalidParameterError", "EdgeListSyntaxError", "NotAnEdgeError", "SharedVertexError",
    "NotMatchedError", "StaleMoveError", "NotMaximalError", "InstanceTooLargeError",
    "GreedyMatcher", "LocalSearchMatcher", "ExactMatcher", "as_graph",
    "OracleLimits", "exact_max_matching", "naive_enumerate_max",
    "Graph", "GraphFamilySpec", "build_graph", "generate", "parse_edgelist",
    "write_edgelist",
    "SwapMove", "find_swap", "apply_swap", "stabilize", "is_swap_stable",
    "Matching", "MatchedEdgeStats", "validate_matching", "empty_matching",
    "greedy_maximalize", "is_maximal", "edge_stats", "uncovered_neighbors",
    "write_matching",
]
