"""Stereotype graphs: data model, validation, and structural recognizers.

A stereotype graph on n pairs has vertices u1^i, u2^i for each pair index
i in 1..n, an edge inside every pair, and between any two pairs exactly
one of the two possible perfect matchings (so every two pairs induce a
4-cycle). The matching choices are the whole degree of freedom, so the
graph is encoded losslessly as one bit per unordered pair of pair
indices: 0 selects the parallel matching (u1-u1, u2-u2), 1 the crossed
matching (u1-u2, u2-u1).

Vertex ids are dense integers: u_p^i has id 2*(i-1) + (p-1), so ids run
0..2n-1 in pair-major order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError, LengthMismatch, NotAStereotypeGraph
from .graphs import Edge, Graph, find_isomorphism, graph_isomorphic, normalize_edge


def vertex_id(pair: int, side: int) -> int:
    """Dense id of u_side^pair (pair >= 1, side in {1, 2})."""
    if side not in (1, 2):
        raise DomainError(f"side must be 1 or 2, got {side}")
    if pair < 1:
        raise DomainError(f"pair index must be positive, got {pair}")
    return 2 * (pair - 1) + (side - 1)


def vertex_pair_side(v: int) -> tuple[int, int]:
    """Inverse of vertex_id: (pair, side) of a dense vertex id."""
    if v < 0:
        raise DomainError(f"vertex id must be non-negative, got {v}")
    return v // 2 + 1, v % 2 + 1


def vertex_name(v: int) -> str:
    pair, side = vertex_pair_side(v)
    return f"u{side}.{pair}"


def parse_vertex_name(name: str) -> int:
    """Parse "u<side>.<pair>" back to a dense vertex id."""
    if not name.startswith("u"):
        raise DomainError(f"bad vertex name {name!r}")
    body = name[1:]
    side_str, dot, pair_str = body.partition(".")
    if not dot or not side_str.isdigit() or not pair_str.isdigit():
        raise DomainError(f"bad vertex name {name!r}")
    side, pair = int(side_str), int(pair_str)
    if side not in (1, 2) or pair < 1:
        raise DomainError(f"bad vertex name {name!r}")
    return vertex_id(pair, side)


def pattern_slot(n: int, i: int, j: int) -> int:
    """Index of the bit for pair indices i < j in the lexicographic layout."""
    if not 1 <= i < j <= n:
        raise DomainError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    return (i - 1) * n - i * (i + 1) // 2 + (j - 1)


def pattern_length(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class StereotypeGraph:
    """A stereotype graph on n pairs, canonically encoded by its pattern bits."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"pair count must be positive, got {self.n}")
        if len(self.bits) != pattern_length(self.n):
            raise LengthMismatch(
                f"expected {pattern_length(self.n)} pattern bits for n={self.n}, "
                f"got {len(self.bits)}"
            )
        for b in self.bits:
            if b not in (0, 1):
                raise DomainError(f"pattern bits must be 0 or 1, got {b!r}")

    def bit(self, i: int, j: int) -> int:
        """Matching bit between pairs i and j (order-insensitive)."""
        if i > j:
            i, j = j, i
        return self.bits[pattern_slot(self.n, i, j)]

    @property
    def vertex_count(self) -> int:
        return 2 * self.n

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.vertex_count, frozenset(self.edge_list()))

    def edge_list(self) -> list[Edge]:
        edges: list[Edge] = []
        for i in range(1, self.n + 1):
            edges.append((vertex_id(i, 1), vertex_id(i, 2)))
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                a1, a2 = vertex_id(i, 1), vertex_id(i, 2)
                b1, b2 = vertex_id(j, 1), vertex_id(j, 2)
                if self.bit(i, j) == 0:
                    edges.extend([(a1, b1), (a2, b2)])
                else:
                    edges.extend([(a1, b2), (a2, b1)])
        return edges


def from_pattern(n: int, bits: Sequence[int]) -> StereotypeGraph:
    """Build the unique stereotype graph with the given matching bits."""
    return StereotypeGraph(n, tuple(bits))


def pattern_of(g: StereotypeGraph) -> tuple[int, ...]:
    """Canonical bit encoding; inverse of from_pattern."""
    return g.bits


def from_edge_list(n: int, edges: Iterable[Edge]) -> StereotypeGraph:
    """Build a stereotype graph from an explicit edge set, or reject it.

    Raises NotAStereotypeGraph carrying the first violated clause:
    a missing in-pair edge, or a pair of pairs whose cross edges are not
    one of the two perfect matchings (which always exhibits either a
    missing adjacency or a triangle through a shared endpoint).
    """
    if n < 1:
        raise DomainError(f"pair count must be positive, got {n}")
    edge_set: set[Edge] = set()
    for u, v in edges:
        e = normalize_edge(u, v)
        if e[0] < 0 or e[1] >= 2 * n:
            raise DomainError(f"edge {e} references a vertex outside 0..{2 * n - 1}")
        if e in edge_set:
            raise DomainError(f"duplicate edge {e}")
        edge_set.add(e)

    for i in range(1, n + 1):
        if (vertex_id(i, 1), vertex_id(i, 2)) not in edge_set:
            raise NotAStereotypeGraph(
                clause="in-pair-edge",
                witness=i,
                message=f"pair {i} is missing its in-pair edge "
                f"{vertex_name(vertex_id(i, 1))}-{vertex_name(vertex_id(i, 2))}",
            )

    bits = [0] * pattern_length(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a1, a2 = vertex_id(i, 1), vertex_id(i, 2)
            b1, b2 = vertex_id(j, 1), vertex_id(j, 2)
            cross = {
                e
                for e in (
                    normalize_edge(a1, b1),
                    normalize_edge(a1, b2),
                    normalize_edge(a2, b1),
                    normalize_edge(a2, b2),
                )
                if e in edge_set
            }
            parallel = {normalize_edge(a1, b1), normalize_edge(a2, b2)}
            crossed = {normalize_edge(a1, b2), normalize_edge(a2, b1)}
            if cross == parallel:
                bits[pattern_slot(n, i, j)] = 0
            elif cross == crossed:
                bits[pattern_slot(n, i, j)] = 1
            else:
                raise NotAStereotypeGraph(
                    clause="pair-pair-four-cycle",
                    witness=(i, j, sorted(cross)),
                    message=f"pairs ({i}, {j}) induce cross edges "
                    f"{sorted(cross)} instead of a perfect matching",
                )

    g = from_pattern(n, bits)
    if set(g.graph.edges) != edge_set:
        extra = sorted(edge_set - set(g.graph.edges))
        raise NotAStereotypeGraph(
            clause="edge-count",
            witness=extra,
            message=f"unexpected extra edges {extra}",
        )
    return g


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: object = None


@dataclass(frozen=True)
class ValidationReport:
    """Per-clause results of validating a labeled graph on 2n vertices."""

    n: int
    checks: tuple[CheckResult, ...]

    @property
    def valid(self) -> bool:
        """True when every defining clause passes (derived checks excluded)."""
        defining = {"pair-structure", "in-pair-edges", "pair-pair-four-cycles"}
        return all(c.passed for c in self.checks if c.name in defining)

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def validate_stereotype(graph: Graph) -> ValidationReport:
    """Check whether a labeled graph is a stereotype graph under the dense
    vertex-id convention, reporting every clause and derived property.

    Failures are data (CheckResult rows with witnesses), never exceptions.
    """
    checks: list[CheckResult] = []
    even = graph.vertex_count % 2 == 0 and graph.vertex_count > 0
    n = graph.vertex_count // 2
    checks.append(
        CheckResult("pair-structure", even, None if even else graph.vertex_count)
    )
    if not even:
        return ValidationReport(n, tuple(checks))

    missing = [
        i
        for i in range(1, n + 1)
        if (vertex_id(i, 1), vertex_id(i, 2)) not in graph.edges
    ]
    checks.append(
        CheckResult("in-pair-edges", not missing, missing[0] if missing else None)
    )

    bad_pairpair: tuple[int, int] | None = None
    for i in range(1, n + 1):
        if bad_pairpair:
            break
        for j in range(i + 1, n + 1):
            quad = [vertex_id(i, 1), vertex_id(i, 2), vertex_id(j, 1), vertex_id(j, 2)]
            induced = {
                normalize_edge(u, v)
                for u, v in itertools.combinations(quad, 2)
                if normalize_edge(u, v) in graph.edges
            }
            degrees = {v: sum(v in e for e in induced) for v in quad}
            is_c4 = len(induced) == 4 and all(d == 2 for d in degrees.values())
            if not is_c4:
                bad_pairpair = (i, j)
                break
    checks.append(CheckResult("pair-pair-four-cycles", bad_pairpair is None, bad_pairpair))

    # Derived structural properties; these follow from the clauses above
    # but are reported so a failure pinpoints what broke.
    edge_ok = len(graph.edges) == n * n
    checks.append(
        CheckResult("edge-count", edge_ok, None if edge_ok else len(graph.edges))
    )
    degrees = graph.degrees()
    irregular = [v for v in range(graph.vertex_count) if degrees[v] != n]
    checks.append(
        CheckResult("n-regular", not irregular, irregular[0] if irregular else None)
    )
    connected = graph.is_connected()
    checks.append(CheckResult("connected", connected))
    diameter = graph.diameter()
    diameter_ok = diameter == (1 if n == 1 else 2)
    checks.append(
        CheckResult("diameter", diameter_ok, None if diameter_ok else diameter)
    )
    girth = graph.girth()
    girth_ok = girth is None if n == 1 else girth in (3, 4)
    checks.append(CheckResult("girth", girth_ok, None if girth_ok else girth))

    return ValidationReport(n, tuple(checks))


@dataclass(frozen=True)
class BasicProfile:
    """Order, size, degree, girth, diameter, connectivity, triangle count."""

    order: int
    size: int
    regular_degree: int
    girth: int | None  # None means acyclic
    diameter: int | None
    connected: bool
    triangle_count: int


def basic_profile(g: StereotypeGraph) -> BasicProfile:
    graph = g.graph
    return BasicProfile(
        order=graph.vertex_count,
        size=len(graph.edges),
        regular_degree=g.n,
        girth=graph.girth(),
        diameter=graph.diameter(),
        connected=graph.is_connected(),
        triangle_count=graph.triangle_count(),
    )


def triangle_pair_triples(g: StereotypeGraph) -> list[tuple[int, int, int]]:
    """Pair-index triples whose three matching bits XOR to zero.

    Each such triple carries exactly two triangles (one per side); the
    test suite cross-validates this shortcut against explicit triangle
    enumeration before anything relies on it.
    """
    return [
        (i, j, k)
        for i, j, k in itertools.combinations(range(1, g.n + 1), 3)
        if g.bit(i, j) ^ g.bit(i, k) ^ g.bit(j, k) == 0
    ]


def restrict_pairs(g: StereotypeGraph, m: int) -> StereotypeGraph:
    """Induced stereotype graph on the first m pairs."""
    if not 1 <= m <= g.n:
        raise DomainError(f"need 1 <= m <= {g.n}, got {m}")
    bits = [g.bit(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    return from_pattern(m, bits)


def recognize_complete_bipartite(g: StereotypeGraph) -> bool:
    """True iff g is a complete bipartite graph on equal sides.

    For a stereotype graph a successful 2-coloring suffices: the edge
    count n^2 then forces every cross-side adjacency to be present.
    """
    color = {0: 1}
    stack = [0]
    graph = g.graph
    while stack:
        u = stack.pop()
        for w in graph.neighbors(u):
            if w not in color:
                color[w] = 3 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return False
    return len(color) == graph.vertex_count


def recognize_complete_ladder(g: StereotypeGraph) -> bool:
    """True iff the vertices split into two n-cliques joined by a perfect
    matching with no other edges, found by backtracking over clique
    bipartitions."""
    graph = g.graph
    n = g.n
    if n == 1:
        return True
    for clique in _cliques_of_size(graph, n):
        rest = sorted(set(range(graph.vertex_count)) - set(clique))
        if not all(graph.has_edge(u, v) for u, v in itertools.combinations(rest, 2)):
            continue
        across = [
            (u, v)
            for u in clique
            for v in rest
            if graph.has_edge(u, v)
        ]
        if len(across) == n and len({u for u, _ in across}) == n and len(
            {v for _, v in across}
        ) == n:
            return True
    return False


def _cliques_of_size(graph: Graph, size: int):
    vertices = range(graph.vertex_count)

    def extend(partial: list[int], candidates: list[int]):
        if len(partial) == size:
            yield tuple(partial)
            return
        for idx, v in enumerate(candidates):
            if all(graph.has_edge(v, u) for u in partial):
                yield from extend(partial + [v], candidates[idx + 1 :])

    yield from extend([], list(vertices))


__all__ = [
    "BasicProfile",
    "CheckResult",
    "Graph",
    "StereotypeGraph",
    "ValidationReport",
    "basic_profile",
    "find_isomorphism",
    "from_edge_list",
    "from_pattern",
    "graph_isomorphic",
    "parse_vertex_name",
    "pattern_length",
    "pattern_of",
    "pattern_slot",
    "recognize_complete_bipartite",
    "recognize_complete_ladder",
    "restrict_pairs",
    "triangle_pair_triples",
    "validate_stereotype",
    "vertex_id",
    "vertex_name",
    "vertex_pair_side",
]
