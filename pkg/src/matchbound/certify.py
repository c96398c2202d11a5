"""Bound computations and certificate assembly.

Verifies, on a (graph, matching) pair, the two lower bounds
n*k >= m and 3*d*k >= 2*m, the per-edge degree claims, and the edge
accounting identity sum(two_s) = 2m that holds for every maximal
matching.  Every comparison is exact integer arithmetic (bounds are
cross-multiplied); no floating point anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotMaximalError
from .graph import Edge, Graph
from .local_search import is_swap_stable
from .matching import (
    MatchedEdgeStats,
    Matching,
    edge_stats,
    is_maximal,
    uncovered_neighbors,
)


def check_theorem1(g: Graph, k: int) -> bool:
    """Exact check of n*k >= m (trivially true when n = 0, since m = 0)."""
    return g.vertex_count * k >= g.edge_count


def check_theorem2(g: Graph, k: int) -> bool:
    """Exact check of 3*d*k >= 2*m (trivially true when d = 0)."""
    return 3 * g.max_degree * k >= 2 * g.edge_count


@dataclass(frozen=True)
class Lemma1EdgeReport:
    """Per-edge verdicts for the four degree claims.

    claim1: d_in + d_out = deg <= d at both endpoints.
    claim2: d_in <= 2k at both endpoints.
    claim3: d_out <= n - 2k at both endpoints.
    claim4: at least one d_out is zero, or d_out(u) = d_out(v) = 1 with
        the single uncovered neighbor shared by both endpoints.  This is
        exactly the no-swap condition; any distinct uncovered pair would
        let a 2-for-1 exchange grow the matching.
    Claim 4 is guaranteed only for maximum or swap-stable matchings; for
    other matchings it is reported but carries no guarantee.
    """

    edge: Edge
    claim1: bool
    claim2: bool
    claim3: bool
    claim4: bool


def check_lemma1(g: Graph, m: Matching) -> list[Lemma1EdgeReport]:
    k = m.size
    reports = []
    for e in m.matched_edges:
        st = edge_stats(m, e)
        u, v = e
        claim1 = (st.d_in_u + st.d_out_u == g.degree(u) <= g.max_degree
                  and st.d_in_v + st.d_out_v == g.degree(v) <= g.max_degree)
        claim2 = st.d_in_u <= 2 * k and st.d_in_v <= 2 * k
        claim3 = (st.d_out_u <= g.vertex_count - 2 * k
                  and st.d_out_v <= g.vertex_count - 2 * k)
        claim4 = _claim4(m, st)
        reports.append(Lemma1EdgeReport(e, claim1, claim2, claim3, claim4))
    return reports


def _claim4(m: Matching, st: MatchedEdgeStats) -> bool:
    if min(st.d_out_u, st.d_out_v) == 0:
        return True
    if st.d_out_u == 1 and st.d_out_v == 1:
        u, v = st.edge
        return uncovered_neighbors(m, u) == uncovered_neighbors(m, v)
    return False


def check_lemma2(g: Graph, m: Matching) -> bool:
    """Check sum(two_s) = 2m and that sum(d_in_u + d_in_v) is even.

    Requires a maximal matching; raises :class:`NotMaximalError` naming
    an uncovered-uncovered edge otherwise.
    """
    for u, v in g.edges:
        if m.partner[u] is None and m.partner[v] is None:
            raise NotMaximalError(u, v)
    stats = [edge_stats(m, e) for e in m.matched_edges]
    total_two_s = sum(st.two_s for st in stats)
    total_d_in = sum(st.d_in_u + st.d_in_v for st in stats)
    return total_two_s == 2 * g.edge_count and total_d_in % 2 == 0


@dataclass(frozen=True)
class PerEdgeCheck:
    stats: MatchedEdgeStats
    claim4_ok: bool
    s_bound_ok: bool    # 2s <= 3d

    def to_dict(self) -> dict:
        st = self.stats
        return {
            "edge": list(st.edge),
            "d_in_u": st.d_in_u,
            "d_in_v": st.d_in_v,
            "d_out_u": st.d_out_u,
            "d_out_v": st.d_out_v,
            "two_s": st.two_s,
            "claim4_ok": self.claim4_ok,
            "s_bound_ok": self.s_bound_ok,
        }


@dataclass(frozen=True)
class BoundCertificate:
    """Full verdict sheet for one (graph, matching) pair.

    Field names are part of the stable JSON interface.  Failures are
    recorded, never raised, so corpus runs yield complete reports.
    """

    n: int
    m: int
    d: int
    k: int
    bound_mn_holds: bool        # n*k >= m
    bound_23md_holds: bool      # 3*d*k >= 2*m
    lemma2_identity_holds: bool
    per_edge: tuple[PerEdgeCheck, ...]
    maximal: bool
    swap_stable: bool

    def in_hypothesis_failures(self) -> list[str]:
        """Names of checks that failed while their hypotheses held.

        The bound checks, claim 4, and the s-bound are guaranteed only
        for maximal swap-stable matchings; the accounting identity needs
        maximality only.
        """
        failures = []
        if self.maximal and not self.lemma2_identity_holds:
            failures.append("lemma2_identity")
        if self.maximal and self.swap_stable:
            if not self.bound_mn_holds:
                failures.append("bound_mn")
            if not self.bound_23md_holds:
                failures.append("bound_23md")
            for pe in self.per_edge:
                if not pe.claim4_ok:
                    failures.append(f"claim4@{pe.stats.edge}")
                if self.d >= 2 and not pe.s_bound_ok:
                    failures.append(f"s_bound@{pe.stats.edge}")
        return failures

    def all_ok(self) -> bool:
        return (self.bound_mn_holds and self.bound_23md_holds
                and self.lemma2_identity_holds and self.maximal
                and self.swap_stable
                and all(pe.claim4_ok and pe.s_bound_ok for pe in self.per_edge))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "k": self.k,
            "bound_mn_holds": self.bound_mn_holds,
            "bound_23md_holds": self.bound_23md_holds,
            "lemma2_identity_holds": self.lemma2_identity_holds,
            "per_edge": [pe.to_dict() for pe in self.per_edge],
            "maximal": self.maximal,
            "swap_stable": self.swap_stable,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [
            f"n: {self.n}",
            f"m: {self.m}",
            f"d: {self.d}",
            f"k: {self.k}",
            f"bound_mn_holds: {self.bound_mn_holds}",
            f"bound_23md_holds: {self.bound_23md_holds}",
            f"lemma2_identity_holds: {self.lemma2_identity_holds}",
            f"maximal: {self.maximal}",
            f"swap_stable: {self.swap_stable}",
        ]
        for pe in self.per_edge:
            st = pe.stats
            lines.append(
                f"edge {st.edge[0]} {st.edge[1]}: "
                f"d_in=({st.d_in_u},{st.d_in_v}) d_out=({st.d_out_u},{st.d_out_v}) "
                f"two_s={st.two_s} claim4_ok={pe.claim4_ok} s_bound_ok={pe.s_bound_ok}")
        return "\n".join(lines) + "\n"


def certify(g: Graph, m: Matching) -> BoundCertificate:
    """Assemble the full certificate for a (graph, matching) pair.

    A stabilized matching always yields an all-true certificate; for
    other matchings, failed checks are simply recorded.
    """
    k = m.size
    maximal = is_maximal(m)
    stable = is_swap_stable(m)
    stats = [edge_stats(m, e) for e in m.matched_edges]
    if maximal:
        total_two_s = sum(st.two_s for st in stats)
        total_d_in = sum(st.d_in_u + st.d_in_v for st in stats)
        lemma2_ok = total_two_s == 2 * g.edge_count and total_d_in % 2 == 0
    else:
        lemma2_ok = False   # hypothesis fails; recorded as a failure
    per_edge = tuple(
        PerEdgeCheck(st, _claim4(m, st), st.two_s <= 3 * g.max_degree)
        for st in stats)
    return BoundCertificate(
        n=g.vertex_count,
        m=g.edge_count,
        d=g.max_degree,
        k=k,
        bound_mn_holds=check_theorem1(g, k),
        bound_23md_holds=check_theorem2(g, k),
        lemma2_identity_holds=lemma2_ok,
        per_edge=per_edge,
        maximal=maximal,
        swap_stable=stable,
    )
