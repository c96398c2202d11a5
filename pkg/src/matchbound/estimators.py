"""Estimator-style front end so matchers compose with sklearn pipelines.

Each matcher follows the fit/attribute convention: ``fit(X)`` accepts a
:class:`~matchbound.graph.Graph` or an ``(n, edge_list)`` pair, computes
a matching, and exposes it through trailing-underscore attributes.
Hyperparameters live in ``__init__`` and round-trip via ``get_params``.
"""

from __future__ import annotations

from typing import Optional, Sequence, Union

from sklearn.base import BaseEstimator

from .certify import BoundCertificate, certify
from .exact import OracleLimits, exact_max_matching
from .graph import Graph, build_graph
from .local_search import stabilize
from .matching import Matching, empty_matching, greedy_maximalize, validate_matching

GraphLike = Union[Graph, tuple[int, Sequence[tuple[int, int]]]]


def as_graph(X: GraphLike) -> Graph:
    """Coerce input to a Graph.

    Accepts a Graph (returned unchanged) or an ``(n, edge_list)`` pair.
    """
    if isinstance(X, Graph):
        return X
    try:
        n, edge_list = X
    except (TypeError, ValueError):
        raise TypeError(
            f"expected a Graph or an (n, edge_list) pair, got {type(X).__name__}") from None
    return build_graph(int(n), [(int(u), int(v)) for u, v in edge_list])


class _BaseMatcher(BaseEstimator):
    """Shared fit machinery; subclasses implement ``_solve``."""

    def _solve(self, g: Graph) -> Matching:
        raise NotImplementedError

    def fit(self, X: GraphLike, y=None) -> "_BaseMatcher":
        g = as_graph(X)
        self.graph_ = g
        self.matching_ = self._solve(g)
        self.size_ = self.matching_.size
        self.certificate_ = certify(g, self.matching_)
        return self

    def fit_predict(self, X: GraphLike, y=None) -> list[tuple[int, int]]:
        """Fit and return the matched edges."""
        self.fit(X)
        return list(self.matching_.matched_edges)


class GreedyMatcher(_BaseMatcher):
    """Maximal matching by a single greedy pass over sorted edges."""

    def _solve(self, g: Graph) -> Matching:
        return greedy_maximalize(empty_matching(g))


class LocalSearchMatcher(_BaseMatcher):
    """Maximal swap-stable matching via 2-for-1 local search.

    The fitted matching certifiably satisfies both lower bounds
    n*k >= m and 3*d*k >= 2*m (see ``certificate_``).

    Parameters
    ----------
    seed_edges : optional list of edges used as the starting matching.
    """

    def __init__(self, seed_edges: Optional[Sequence[tuple[int, int]]] = None):
        self.seed_edges = seed_edges

    def _solve(self, g: Graph) -> Matching:
        seed = None
        if self.seed_edges is not None:
            seed = validate_matching(g, self.seed_edges)
        return stabilize(g, seed)


class ExactMatcher(_BaseMatcher):
    """Maximum matching by branch-and-bound, for small instances only.

    Parameters
    ----------
    max_edges, max_vertices : instance-size budget; fitting a larger
        graph raises :class:`~matchbound.errors.InstanceTooLargeError`.
    """

    def __init__(self, max_edges: int = 40, max_vertices: int = 24):
        self.max_edges = max_edges
        self.max_vertices = max_vertices

    def _solve(self, g: Graph) -> Matching:
        limits = OracleLimits(max_edges=self.max_edges, max_vertices=self.max_vertices)
        return exact_max_matching(g, limits)
