"""Exact maximum matching on small instances.

Branch-and-bound over vertices serves as ground truth for bound and
lemma checks; a separate edge-subset enumerator cross-checks the
branch-and-bound in tests.  Neither is meant for large graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLargeError
from .graph import Graph
from .matching import Matching, validate_matching


@dataclass(frozen=True)
class OracleLimits:
    max_edges: int = 40
    max_vertices: int = 24

    def __post_init__(self):
        if self.max_edges <= 0 or self.max_vertices <= 0:
            raise ValueError("oracle limits must be positive")


def exact_max_matching(g: Graph, limits: OracleLimits = OracleLimits()) -> Matching:
    """Compute a maximum matching by branch-and-bound.

    Branches on the lowest-id vertex that still has neighbors: either
    leave it uncovered (explored first) or match it with each neighbor
    in ascending order.  A branch is pruned when its current size plus
    floor(active_vertices / 2) cannot beat the best found.  Fixed branch
    order makes repeated runs return the identical matching.

    Raises :class:`InstanceTooLargeError` beyond ``limits``.
    """
    if g.edge_count > limits.max_edges or g.vertex_count > limits.max_vertices:
        raise InstanceTooLargeError(
            f"instance n={g.vertex_count}, m={g.edge_count} exceeds limits "
            f"({limits.max_vertices} vertices, {limits.max_edges} edges)")

    adj = [set(nbrs) for nbrs in g.adjacency]
    current: list[tuple[int, int]] = []
    best: list[tuple[int, int]] = []

    def detach(u: int) -> set[int]:
        removed = adj[u]
        adj[u] = set()
        for w in removed:
            adj[w].discard(u)
        return removed

    def reattach(u: int, removed: set[int]) -> None:
        adj[u] = removed
        for w in removed:
            adj[w].add(u)

    def search(start: int) -> None:
        nonlocal best
        active = sum(1 for s in adj if s)
        if len(current) + active // 2 <= len(best):
            return
        u = start
        while u < g.vertex_count and not adj[u]:
            u += 1
        if u == g.vertex_count:
            if len(current) > len(best):
                best = current.copy()
            return

        # branch 1: leave u uncovered
        removed = detach(u)
        search(u + 1)
        reattach(u, removed)

        # branch 2..: match u with each neighbor
        for v in sorted(adj[u]):
            removed_u = detach(u)
            removed_v = detach(v)
            current.append((u, v))
            search(u + 1)
            current.pop()
            reattach(v, removed_v)
            reattach(u, removed_u)

    search(0)
    return validate_matching(g, best)


def naive_enumerate_max(g: Graph, max_edges: int = 20) -> int:
    """Maximum matching size by exhausting edge subsets.

    Walks the take/skip tree over the edge list, extending only with
    edges disjoint from the current subset, which visits exactly the
    matchings of the graph.  Test-only cross-check for
    :func:`exact_max_matching`; raises :class:`InstanceTooLargeError`
    when m > ``max_edges``.
    """
    if g.edge_count > max_edges:
        raise InstanceTooLargeError(
            f"naive enumeration limited to {max_edges} edges, got {g.edge_count}")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    m = len(masks)

    def best_from(i: int, covered: int) -> int:
        top = 0
        for j in range(i, m):
            if masks[j] & covered == 0:
                got = 1 + best_from(j + 1, covered | masks[j])
                if got > top:
                    top = got
        return top

    return best_from(0, 0)
