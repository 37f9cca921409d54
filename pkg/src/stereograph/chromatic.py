"""Vertex coloring: exact counts, chromatic polynomials, the chromatic
stability index, and the aggregate stability report.

The chromatic polynomial is assembled from the number of partitions of
the vertex set into i nonempty independent sets (a subset DP), combined
with falling factorials; proper-coloring counts are, separately, plain
backtracking over raw color assignments so the two routes stay
independent of each other. The chromatic number is exact branch and
bound: greedy upper bound, maximum-clique lower bound, then k-coloring
searches in canonical vertex order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Mapping

from .errors import DomainError, InternalInvariant, SizeExceeded
from .graphs import Graph, max_clique_size
from .merge import reduce_to_k2
from .model import (
    StereotypeGraph,
    recognize_complete_bipartite,
    vertex_id,
)
from .polynomials import IntPolynomial, falling_factorial_coefficients
from .spectral import (
    adjacency_matrix,
    characteristic_polynomial,
    characteristic_criterion,
    matrix_criterion,
    minor_criterion,
)

CHROMATIC_POLY_VERTEX_BOUND = 14


@dataclass(frozen=True)
class Coloring:
    """A proper color assignment, vertex id -> 1-based color index."""

    assignment: tuple[tuple[int, int], ...]
    colors_used: int

    @classmethod
    def from_mapping(cls, assignment: Mapping[int, int]) -> "Coloring":
        return cls(
            assignment=tuple(sorted(assignment.items())),
            colors_used=len(set(assignment.values())),
        )

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.assignment)

    def color_of(self, v: int) -> int:
        return self.mapping[v]

    def is_proper(self, graph: Graph) -> bool:
        colors = self.mapping
        return all(colors[u] != colors[v] for u, v in graph.edges)


def count_proper_colorings(graph: Graph, x: int) -> int:
    """Number of proper colorings from a palette of x colors, counted by
    exhaustive backtracking over assignments (not all colors need occur)."""
    if x < 0:
        raise DomainError(f"palette size must be non-negative, got {x}")
    n = graph.vertex_count
    if n == 0:
        return 1
    if x == 0:
        return 0
    earlier = [
        [w for w in graph.neighbors(v) if w < v] for v in range(n)
    ]
    colors = [0] * n

    def count_from(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for c in range(1, x + 1):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                total += count_from(v + 1)
        colors[v] = 0
        return total

    return count_from(0)


def independent_partition_counts(graph: Graph) -> list[int]:
    """Entry i is the number of partitions of the vertex set into exactly
    i nonempty independent sets."""
    n = graph.vertex_count
    if n == 0:
        return [1]
    nbr = [0] * n
    for u, v in graph.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    full = (1 << n) - 1
    independent = bytearray(full + 1)
    independent[0] = 1
    for mask in range(1, full + 1):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        independent[mask] = 1 if independent[rest] and not (nbr[v] & rest) else 0

    dp: list[list[int]] = [[] for _ in range(full + 1)]
    dp[0] = [1]
    for mask in range(1, full + 1):
        low = mask & -mask
        v = low.bit_length() - 1
        avail = (mask ^ low) & ~nbr[v]
        counts = [0] * (mask.bit_count() + 1)
        sub = avail
        while True:
            if independent[sub]:
                prev = dp[mask ^ low ^ sub]
                for parts, ways in enumerate(prev):
                    if ways:
                        counts[parts + 1] += ways
            if sub == 0:
                break
            sub = (sub - 1) & avail
        while counts and counts[-1] == 0:
            counts.pop()
        dp[mask] = counts

    result = dp[full]
    return list(result) + [0] * (n + 1 - len(result))


@lru_cache(maxsize=4096)
def _chromatic_polynomial_cached(graph: Graph) -> IntPolynomial:
    counts = independent_partition_counts(graph)
    ascending = [0] * (graph.vertex_count + 1)
    for parts, ways in enumerate(counts):
        if ways == 0:
            continue
        for power, coeff in enumerate(falling_factorial_coefficients(parts)):
            ascending[power] += ways * coeff
    return IntPolynomial(tuple(reversed(ascending)))


def chromatic_polynomial(
    graph: Graph, max_vertices: int = CHROMATIC_POLY_VERTEX_BOUND
) -> IntPolynomial:
    """Exact chromatic polynomial, degree = vertex count, monic."""
    if graph.vertex_count > max_vertices:
        raise SizeExceeded(
            f"chromatic polynomial bounded at {max_vertices} vertices, "
            f"got {graph.vertex_count}"
        )
    return _chromatic_polynomial_cached(graph)


@dataclass(frozen=True)
class BipartitionResult:
    """Either a proper 2-coloring or an odd-cycle witness, never both."""

    coloring: Coloring | None
    odd_cycle: tuple[int, ...] | None


def two_coloring(graph: Graph) -> BipartitionResult:
    """Breadth-first bipartition; on failure returns an odd cycle."""
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in range(graph.vertex_count):
        if root in color:
            continue
        color[root] = 1
        parent[root] = None
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in sorted(graph.neighbors(u)):
                if w not in color:
                    color[w] = 3 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    cycle = _odd_cycle_from_conflict(u, w, parent)
                    return BipartitionResult(coloring=None, odd_cycle=cycle)
    if graph.vertex_count == 0:
        return BipartitionResult(coloring=Coloring((), 0), odd_cycle=None)
    return BipartitionResult(coloring=Coloring.from_mapping(color), odd_cycle=None)


def _odd_cycle_from_conflict(
    u: int, w: int, parent: Mapping[int, int | None]
) -> tuple[int, ...]:
    ancestors_u = [u]
    while parent[ancestors_u[-1]] is not None:
        ancestors_u.append(parent[ancestors_u[-1]])
    position = {v: idx for idx, v in enumerate(ancestors_u)}
    path_w = [w]
    while path_w[-1] not in position:
        path_w.append(parent[path_w[-1]])
    meet = path_w[-1]
    cycle = tuple(ancestors_u[: position[meet] + 1]) + tuple(reversed(path_w[:-1]))
    if len(cycle) % 2 == 0:
        raise InternalInvariant("bipartition conflict produced an even cycle")
    return cycle


def greedy_coloring(graph: Graph) -> Coloring:
    """First-fit coloring in canonical vertex order (an upper bound)."""
    assignment: dict[int, int] = {}
    for v in range(graph.vertex_count):
        taken = {assignment[w] for w in graph.neighbors(v) if w in assignment}
        c = 1
        while c in taken:
            c += 1
        assignment[v] = c
    return Coloring.from_mapping(assignment)


def _k_coloring(graph: Graph, k: int) -> Coloring | None:
    """Backtracking search for a proper coloring with at most k colors,
    canonical vertex order, new colors introduced in increasing order."""
    n = graph.vertex_count
    earlier = [[w for w in graph.neighbors(v) if w < v] for v in range(n)]
    colors = [0] * n

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        limit = min(used + 1, k)
        for c in range(1, limit + 1):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                if place(v + 1, max(used, c)):
                    return True
        colors[v] = 0
        return False

    if not place(0, 0):
        return None
    return Coloring.from_mapping({v: colors[v] for v in range(n)})


def optimal_coloring(graph: Graph) -> Coloring:
    """A verified proper coloring using exactly chi(graph) colors."""
    if graph.vertex_count == 0:
        raise DomainError("chromatic number of an empty graph is undefined here")
    upper = greedy_coloring(graph)
    lower = max_clique_size(graph)
    best = upper
    if upper.colors_used > lower:
        for k in range(lower, upper.colors_used):
            attempt = _k_coloring(graph, k)
            if attempt is not None:
                best = attempt
                break
    if not best.is_proper(graph):
        raise InternalInvariant("optimal coloring failed the properness check")
    return best


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number (the chromatic stability index for
    stereotype graphs)."""
    return optimal_coloring(graph).colors_used


def csi(g: StereotypeGraph) -> int:
    return chromatic_number(g.graph)


def constructive_pair_coloring(g: StereotypeGraph) -> Coloring:
    """Proper coloring with at most n colors by the sequential pair walk.

    Colors u2^1 first, then walks pairs in index order giving pair i the
    colors {i-1, i} oriented to avoid the previous pair's same-colored
    neighbor, and finally gives u1^1 the smallest color absent from its
    neighborhood. Free choices always take the smallest color index.
    """
    if g.n < 2:
        raise DomainError("the pair-walk coloring needs at least two pairs")
    graph = g.graph
    theta: dict[int, int] = {vertex_id(1, 2): 1}

    first = vertex_id(2, 1)
    if graph.has_edge(vertex_id(1, 2), first):
        theta[first] = 2
    else:
        theta[first] = 1
    theta[vertex_id(2, 2)] = 3 - theta[first]

    for i in range(3, g.n + 1):
        prev_vertex = next(
            v
            for v in (vertex_id(i - 1, 1), vertex_id(i - 1, 2))
            if theta[v] == i - 1
        )
        u1 = vertex_id(i, 1)
        theta[u1] = i if graph.has_edge(u1, prev_vertex) else i - 1
        theta[vertex_id(i, 2)] = (2 * i - 1) - theta[u1]

    pivot = vertex_id(1, 1)
    used_nearby = {theta[w] for w in graph.neighbors(pivot)}
    free = next((c for c in range(1, g.n + 1) if c not in used_nearby), None)
    if free is None:
        raise InternalInvariant("no free color remained for the first vertex")
    theta[pivot] = free

    coloring = Coloring.from_mapping(theta)
    if not coloring.is_proper(graph) or coloring.colors_used > g.n:
        raise InternalInvariant("pair-walk coloring violated its own contract")
    return coloring


class StabilityComparison(enum.Enum):
    MORE_STABLE = "more-stable"
    SAME_STABLE = "same-stable"
    MORE_UNSTABLE = "more-unstable"


def compare_stability(g1: StereotypeGraph, g2: StereotypeGraph) -> StabilityComparison:
    """Order two graphs by chromatic stability index; lower is more stable."""
    chi1, chi2 = csi(g1), csi(g2)
    if chi1 < chi2:
        return StabilityComparison.MORE_STABLE
    if chi1 > chi2:
        return StabilityComparison.MORE_UNSTABLE
    return StabilityComparison.SAME_STABLE


def chromatically_bipartite_criterion(
    g: StereotypeGraph, max_vertices: int = CHROMATIC_POLY_VERTEX_BOUND
) -> bool:
    """Stability via the second chromatic coefficient reaching C(n^2, 2).

    Also cross-checks the structural coefficient laws (b0 = 1,
    b1 = -n^2, b2 <= C(n^2, 2), and b2 - C(n^2, 2) = c3/2 against the
    characteristic polynomial); any violation is an internal bug.
    """
    if g.n < 2:
        raise DomainError("criterion requires at least two pairs")
    chrom = chromatic_polynomial(g.graph, max_vertices)
    b0, b1, b2 = chrom.coefficient(0), chrom.coefficient(1), chrom.coefficient(2)
    edge_pairs = comb(g.n * g.n, 2)
    c3 = characteristic_polynomial(adjacency_matrix(g)).coefficient(3)
    if b0 != 1 or b1 != -g.n * g.n:
        raise InternalInvariant(f"unexpected leading chromatic coefficients ({b0}, {b1})")
    if b2 > edge_pairs or 2 * (b2 - edge_pairs) != c3:
        raise InternalInvariant(
            f"chromatic/characteristic coefficient mismatch: b2={b2}, c3={c3}"
        )
    return b2 == edge_pairs


@dataclass(frozen=True)
class StabilityReport:
    """Verdicts of every stability criterion on one graph.

    A criterion that does not apply (single pair) or was skipped for
    size is None; `agreement` covers the executed criteria plus the
    index test csi == 2.
    """

    merge: bool
    coloring: bool
    bipartite: bool
    girth: bool | None
    minor: bool
    matrix: bool | None
    characteristic: bool | None
    chromatically_bipartite: bool | None
    csi: int
    agreement: bool

    def criteria(self) -> dict[str, bool | None]:
        return {
            "merge": self.merge,
            "coloring": self.coloring,
            "bipartite": self.bipartite,
            "girth": self.girth,
            "minor": self.minor,
            "matrix": self.matrix,
            "characteristic": self.characteristic,
            "chromatically-bipartite": self.chromatically_bipartite,
        }

    @property
    def stable(self) -> bool:
        return self.csi == 2


def stability_report(
    g: StereotypeGraph, max_poly_vertices: int = CHROMATIC_POLY_VERTEX_BOUND
) -> StabilityReport:
    """Run every stability predicate plus the chromatic stability index.

    Disagreement between executed criteria is reported via the agreement
    flag, never resolved silently.
    """
    merge = reduce_to_k2(g).stable
    coloring = two_coloring(g.graph).coloring is not None
    bipartite = recognize_complete_bipartite(g)
    minor = minor_criterion(g)
    girth: bool | None = None
    matrix: bool | None = None
    characteristic: bool | None = None
    chrom_bipartite: bool | None = None
    if g.n >= 2:
        girth = g.graph.girth() == 4
        matrix = matrix_criterion(g)
        characteristic = characteristic_criterion(g)
        if g.vertex_count <= max_poly_vertices:
            chrom_bipartite = chromatically_bipartite_criterion(g, max_poly_vertices)
    index = csi(g)
    executed = [
        v
        for v in (
            merge,
            coloring,
            bipartite,
            girth,
            minor,
            matrix,
            characteristic,
            chrom_bipartite,
        )
        if v is not None
    ]
    agreement = len(set(executed)) == 1 and (index == 2) == executed[0]
    return StabilityReport(
        merge=merge,
        coloring=coloring,
        bipartite=bipartite,
        girth=girth,
        minor=minor,
        matrix=matrix,
        characteristic=characteristic,
        chromatically_bipartite=chrom_bipartite,
        csi=index,
        agreement=agreement,
    )


__all__ = [
    "BipartitionResult",
    "CHROMATIC_POLY_VERTEX_BOUND",
    "Coloring",
    "StabilityComparison",
    "StabilityReport",
    "chromatic_number",
    "chromatic_polynomial",
    "chromatically_bipartite_criterion",
    "compare_stability",
    "constructive_pair_coloring",
    "count_proper_colorings",
    "csi",
    "greedy_coloring",
    "independent_partition_counts",
    "optimal_coloring",
    "stability_report",
    "two_coloring",
]
