"""Immutable simple-graph representation, validated construction, and
deterministic graph-family generators.

Vertex ids are 0-based contiguous integers; isolated vertices are allowed
and count towards ``n``.  Edges are stored normalized with ``u < v`` in
sorted order, so two graphs built from permuted edge lists compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, TextIO, Union

from .errors import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    InvalidParameterError,
    LoopEdgeError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]


class Graph:
    """A simple undirected graph (no loops, no multi-edges).

    Instances are immutable after construction; use :func:`build_graph`
    or :func:`generate` to create them.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "max_degree", "_edge_set")

    def __init__(self, vertex_count: int, edges: tuple[Edge, ...],
                 adjacency: tuple[tuple[int, ...], ...], max_degree: int):
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "_edge_set", frozenset(edges))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return (f"Graph(n={self.vertex_count}, m={self.edge_count}, "
                f"d={self.max_degree})")


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a validated Graph from ``n`` and an edge list.

    Edges may be given in either orientation; they are normalized to
    ``u < v`` and sorted.  Raises :class:`LoopEdgeError`,
    :class:`DuplicateEdgeError` or :class:`VertexOutOfRangeError` on
    invalid input.
    """
    if n < 0:
        raise InvalidParameterError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    normalized: list[Edge] = []
    for u, v in edge_list:
        if u == v:
            raise LoopEdgeError(u)
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRangeError(w, n)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(u, v)
        seen.add((u, v))
        normalized.append((u, v))
    normalized.sort()

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in normalized:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
    max_degree = max((len(nbrs) for nbrs in adjacency), default=0)
    return Graph(n, tuple(normalized), adjacency, max_degree)


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------

FAMILIES = ("triangles", "path", "cycle", "complete", "star", "random")


@dataclass(frozen=True)
class GraphFamilySpec:
    """Parameters for a named deterministic generator family.

    Equal specs always yield identical graphs, including the ``random``
    family, which uses an explicit seed.
    """

    family: str
    size: int = 0                      # r, n, or leaf count depending on family
    p: Fraction = field(default_factory=lambda: Fraction(0))
    seed: int = 0

    @classmethod
    def triangles(cls, r: int) -> "GraphFamilySpec":
        return cls("triangles", r)

    @classmethod
    def path(cls, n: int) -> "GraphFamilySpec":
        return cls("path", n)

    @classmethod
    def cycle(cls, n: int) -> "GraphFamilySpec":
        return cls("cycle", n)

    @classmethod
    def complete(cls, n: int) -> "GraphFamilySpec":
        return cls("complete", n)

    @classmethod
    def star(cls, leaves: int) -> "GraphFamilySpec":
        return cls("star", leaves)

    @classmethod
    def random(cls, n: int, p: Union[Fraction, float, str], seed: int) -> "GraphFamilySpec":
        return cls("random", n, Fraction(p), seed)


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 generator: (new_state, output word)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def generate(spec: GraphFamilySpec) -> Graph:
    """Build the graph described by ``spec``.

    Families:
      - triangles(r): r vertex-disjoint triangles on ids {3i, 3i+1, 3i+2}
      - path(n): the path 0-1-...-(n-1)
      - cycle(n): requires n >= 3
      - complete(n): K_n
      - star(leaves): center 0 joined to leaves 1..L
      - random(n, p, seed): each pair included independently with
        probability p, driven by splitmix64 over pairs in lexicographic
        order (edge included iff the next 64-bit word < p * 2^64)
    """
    fam, size = spec.family, spec.size
    if fam == "triangles":
        _require(size >= 1, f"triangles requires r >= 1, got {size}")
        edges = []
        for i in range(size):
            a = 3 * i
            edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
        return build_graph(3 * size, edges)
    if fam == "path":
        _require(size >= 1, f"path requires n >= 1, got {size}")
        return build_graph(size, [(i, i + 1) for i in range(size - 1)])
    if fam == "cycle":
        _require(size >= 3, f"cycle requires n >= 3, got {size}")
        return build_graph(size, [(i, (i + 1) % size) for i in range(size)])
    if fam == "complete":
        _require(size >= 1, f"complete requires n >= 1, got {size}")
        return build_graph(size, [(i, j) for i in range(size) for j in range(i + 1, size)])
    if fam == "star":
        _require(size >= 1, f"star requires leaves >= 1, got {size}")
        return build_graph(size + 1, [(0, i) for i in range(1, size + 1)])
    if fam == "random":
        _require(size >= 0, f"random requires n >= 0, got {size}")
        _require(0 <= spec.p <= 1, f"edge probability must be in [0, 1], got {spec.p}")
        _require(0 <= spec.seed <= _MASK64, "seed must fit in 64 bits")
        threshold = int(spec.p * (1 << 64))
        state = spec.seed
        edges = []
        for u in range(size):
            for v in range(u + 1, size):
                state, word = _splitmix64(state)
                if word < threshold:
                    edges.append((u, v))
        return build_graph(size, edges)
    raise InvalidParameterError(f"unknown family {fam!r}; expected one of {FAMILIES}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameterError(message)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def write_edgelist(g: Graph, out: TextIO) -> None:
    """Write the graph in the plain edge-list format.

    First non-comment line is "n m", followed by one "u v" line per edge
    with u < v, edges in sorted order, newline-terminated.
    """
    out.write(f"{g.vertex_count} {g.edge_count}\n")
    for u, v in g.edges:
        out.write(f"{u} {v}\n")


def parse_edgelist(text: Union[str, TextIO]) -> Graph:
    """Parse the edge-list text format; '#' lines are comments.

    Raises :class:`EdgeListSyntaxError` with the offending line number on
    malformed input, and delegates semantic validation to
    :func:`build_graph`.
    """
    if not isinstance(text, str):
        text = text.read()
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListSyntaxError(lineno, f"expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListSyntaxError(lineno, f"expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListSyntaxError(lineno, "n and m must be non-negative")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise EdgeListSyntaxError(1, "missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise EdgeListSyntaxError(1, f"header declares m={m} but {len(edges)} edge lines found")
    return build_graph(n, edges)
