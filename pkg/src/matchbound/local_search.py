"""Local search by 2-for-1 swaps.

A swap replaces a matched edge (u, v) by (u, u') and (v, v') where
u' != v' are uncovered neighbors of u and v, growing the matching by one
edge (this is augmentation along a path of length 3).  Alternating
greedy maximalization with swaps until none applies yields a maximal,
swap-stable matching that meets both lower bounds k >= m/n and
k >= 2m/(3d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import StaleMoveError
from .graph import Edge, Graph
from .matching import Matching, empty_matching, greedy_maximalize, uncovered_neighbors


@dataclass(frozen=True)
class SwapMove:
    """One 2-for-1 exchange: drop ``removed``, add the two flank edges."""

    removed: Edge          # matched edge (u, v)
    added_1: Edge          # (u, u')
    added_2: Edge          # (v, v')


def find_swap(m: Matching) -> Optional[SwapMove]:
    """Return the first applicable swap, or None if the matching is stable.

    Matched edges are scanned in list order; within an edge the
    lexicographically smallest valid (u', v') pair is chosen.  A matched
    edge (u, v) admits a swap iff its uncovered neighborhoods contain a
    distinct pair u' != v'.
    """
    for u, v in m.matched_edges:
        nu = uncovered_neighbors(m, u)
        nv = uncovered_neighbors(m, v)
        if not nu or not nv:
            continue
        for up in nu:
            for vp in nv:
                if up != vp:
                    return SwapMove((u, v), (u, up), (v, vp))
    return None


def apply_swap(m: Matching, s: SwapMove) -> Matching:
    """Apply a swap produced by :func:`find_swap` on ``m``.

    Raises :class:`StaleMoveError` if the move no longer matches the
    state of ``m``.  The result is a valid matching one edge larger.
    """
    u, v = s.removed
    up = s.added_1[1]
    vp = s.added_2[1]
    g = m.graph
    if (s.removed not in m.matched_edges
            or s.added_1[0] != u or s.added_2[0] != v
            or up == vp
            or m.partner[up] is not None or m.partner[vp] is not None
            or not g.has_edge(u, up) or not g.has_edge(v, vp)):
        raise StaleMoveError(f"swap {s} is not applicable to the current matching")
    partner = list(m.partner)
    partner[u], partner[up] = up, u
    partner[v], partner[vp] = vp, v
    edges = [e for e in m.matched_edges if e != s.removed]
    edges.append((min(u, up), max(u, up)))
    edges.append((min(v, vp), max(v, vp)))
    edges.sort()
    return Matching(g, tuple(edges), tuple(partner))


def stabilize(g: Graph, seed_matching: Optional[Matching] = None) -> Matching:
    """Run the local search to a maximal, swap-stable matching.

    Loops greedy maximalization and swap application until no swap
    applies.  Terminates after at most floor(n/2) swaps since each swap
    grows the matching by one edge.  The output size never drops below
    the seed's.
    """
    m = seed_matching if seed_matching is not None else empty_matching(g)
    while True:
        m = greedy_maximalize(m)
        move = find_swap(m)
        if move is None:
            return m
        m = apply_swap(m, move)


def is_swap_stable(m: Matching) -> bool:
    return find_swap(m) is None
