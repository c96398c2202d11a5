"""Matchings, validity checking, greedy maximalization, and the per-edge
degree statistics (d_in, d_out, s) that the bound checks consume.

For a covered vertex u, d_in(u) counts incident edges into the covered
set and d_out(u) counts edges to uncovered vertices, so
d_in(u) + d_out(u) = deg(u).  The per-edge quantity s(u, v) is stored
doubled (``two_s``) so all arithmetic stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .errors import NotAnEdgeError, NotMatchedError, SharedVertexError
from .graph import Edge, Graph


class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph.

    Treated as immutable once returned by a constructor routine.
    ``matched_edges`` is kept in sorted order for determinism.
    """

    __slots__ = ("graph", "matched_edges", "partner")

    def __init__(self, graph: Graph, matched_edges: tuple[Edge, ...],
                 partner: tuple[Optional[int], ...]):
        self.graph = graph
        self.matched_edges = matched_edges
        self.partner = partner

    @property
    def size(self) -> int:
        return len(self.matched_edges)

    def is_covered(self, u: int) -> bool:
        return self.partner[u] is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.graph == other.graph and self.matched_edges == other.matched_edges

    def __repr__(self) -> str:
        return f"Matching(k={self.size}, edges={list(self.matched_edges)})"


def validate_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> Matching:
    """Build a Matching after checking that every pair is a graph edge
    and no vertex is covered twice.

    Raises :class:`NotAnEdgeError` or :class:`SharedVertexError`.
    """
    partner: list[Optional[int]] = [None] * g.vertex_count
    normalized: list[Edge] = []
    for u, v in edges:
        if u > v:
            u, v = v, u
        if not g.has_edge(u, v):
            raise NotAnEdgeError(u, v)
        for w in (u, v):
            if partner[w] is not None:
                raise SharedVertexError(w)
        partner[u] = v
        partner[v] = u
        normalized.append((u, v))
    normalized.sort()
    return Matching(g, tuple(normalized), tuple(partner))


def empty_matching(g: Graph) -> Matching:
    return Matching(g, (), (None,) * g.vertex_count)


def greedy_maximalize(m: Matching) -> Matching:
    """Extend ``m`` to a maximal matching.

    Scans the graph's edges in canonical sorted order and adds every edge
    whose endpoints are both uncovered.  The result contains the input
    and admits no uncovered-uncovered edge.
    """
    partner = list(m.partner)
    edges = list(m.matched_edges)
    changed = False
    for u, v in m.graph.edges:
        if partner[u] is None and partner[v] is None:
            partner[u] = v
            partner[v] = u
            edges.append((u, v))
            changed = True
    if not changed:
        return m
    edges.sort()
    return Matching(m.graph, tuple(edges), tuple(partner))


def is_maximal(m: Matching) -> bool:
    """True iff every graph edge has at least one covered endpoint."""
    partner = m.partner
    return all(partner[u] is not None or partner[v] is not None
               for u, v in m.graph.edges)


@dataclass(frozen=True)
class MatchedEdgeStats:
    """Degree statistics of one matched edge (u, v).

    ``two_s`` is twice the per-edge quantity
    s = (d_in(u) + d_in(v)) / 2 + d_out(u) + d_out(v).
    """

    edge: Edge
    d_in_u: int
    d_in_v: int
    d_out_u: int
    d_out_v: int

    @property
    def two_s(self) -> int:
        return self.d_in_u + self.d_in_v + 2 * self.d_out_u + 2 * self.d_out_v


def edge_stats(m: Matching, e: tuple[int, int]) -> MatchedEdgeStats:
    """Compute d_in/d_out at both endpoints of a matched edge.

    Raises :class:`NotMatchedError` if ``e`` is not in the matching.
    """
    u, v = e
    if u > v:
        u, v = v, u
    if (u, v) not in m.matched_edges:
        raise NotMatchedError(u, v)
    partner = m.partner

    def split(w: int) -> tuple[int, int]:
        d_in = sum(1 for x in m.graph.adjacency[w] if partner[x] is not None)
        return d_in, m.graph.degree(w) - d_in

    d_in_u, d_out_u = split(u)
    d_in_v, d_out_v = split(v)
    return MatchedEdgeStats((u, v), d_in_u, d_in_v, d_out_u, d_out_v)


def uncovered_neighbors(m: Matching, u: int) -> list[int]:
    """Neighbors of ``u`` not covered by the matching, in ascending order."""
    partner = m.partner
    return [v for v in m.graph.adjacency[u] if partner[v] is None]


def write_matching(m: Matching, out: TextIO) -> None:
    """Serialize as a "k <size>" line followed by "u v" lines in sorted order."""
    out.write(f"k {m.size}\n")
    for u, v in m.matched_edges:
        out.write(f"{u} {v}\n")
