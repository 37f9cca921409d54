"""Canonical, random, exhaustive, and CSI-targeted stereotype graphs.

The two canonical families are the all-crossed pattern (complete
bipartite, index 2) and the all-parallel pattern (complete ladder, index
n). Random generation draws pattern bits from a seeded splitmix64
stream, so identical (n, seed) inputs reproduce byte-identical graphs on
every platform. The expansion operations add one pair at a time, either
preserving the chromatic stability index or incrementing it by building
a clique through the new pair, which together reach every index in
[2, n].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .chromatic import Coloring, chromatic_number, optimal_coloring
from .errors import (
    DomainError,
    EdgeAbsent,
    InternalInvariant,
    InvalidColoring,
    RangeError,
    TooLarge,
)
from .graphs import Edge, Graph, find_clique_of_size, graph_isomorphic, normalize_edge
from .model import (
    StereotypeGraph,
    from_pattern,
    pattern_length,
    recognize_complete_bipartite,
    recognize_complete_ladder,
    vertex_id,
    vertex_pair_side,
)

DEFAULT_ENUMERATION_BOUND = 6

PRNG_NAME = "splitmix64-v1"
_MASK64 = (1 << 64) - 1


def splitmix64_stream(seed: int) -> Iterator[int]:
    """The splitmix64 sequence for a 64-bit seed; fully deterministic."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def gen_complete_bipartite(n: int) -> StereotypeGraph:
    """The all-crossed pattern: both sides independent, index 2."""
    return from_pattern(n, (1,) * pattern_length(n))


def gen_complete_ladder(n: int) -> StereotypeGraph:
    """The all-parallel pattern: two n-cliques joined by a matching."""
    return from_pattern(n, (0,) * pattern_length(n))


def gen_random(n: int, seed: int) -> StereotypeGraph:
    """Uniform pattern with independent bits from splitmix64(seed)."""
    stream = splitmix64_stream(seed)
    bits = tuple(next(stream) & 1 for _ in range(pattern_length(n)))
    return from_pattern(n, bits)


def enumerate_all(
    n: int, limit: int | None = DEFAULT_ENUMERATION_BOUND, force: bool = False
) -> Iterator[StereotypeGraph]:
    """All 2^C(n,2) stereotype graphs on n pairs in lexicographic bit order."""
    if limit is not None and n > limit and not force:
        raise TooLarge(f"enumeration bounded at n <= {limit}, got n={n}")
    length = pattern_length(n)
    for value in range(1 << length):
        bits = tuple((value >> (length - 1 - s)) & 1 for s in range(length))
        yield from_pattern(n, bits)


@dataclass(frozen=True)
class CensusRow:
    n: int
    k: int
    labeled_count: int
    iso_class_count: int


def census(
    n: int, limit: int | None = DEFAULT_ENUMERATION_BOUND, force: bool = False
) -> list[CensusRow]:
    """Labeled and isomorphism-class counts of the graphs on n pairs,
    grouped by chromatic stability index.

    Verifies the structural extremes while counting: every index-2 graph
    must be complete bipartite, every index-n graph a complete ladder,
    and each index in [2, n] must be populated.
    """
    labeled: dict[int, int] = {}
    representatives: dict[int, list[StereotypeGraph]] = {}
    for g in enumerate_all(n, limit=limit, force=force):
        k = chromatic_number(g.graph)
        labeled[k] = labeled.get(k, 0) + 1
        reps = representatives.setdefault(k, [])
        if not any(
            _stereotype_isomorphic(g, known) for known in reps
        ):
            reps.append(g)
        if k == 2 and not recognize_complete_bipartite(g):
            raise InternalInvariant(f"index-2 graph {g.bits} is not complete bipartite")
        if k == n and n >= 2 and not recognize_complete_ladder(g):
            raise InternalInvariant(f"index-{n} graph {g.bits} is not a complete ladder")

    if n >= 2:
        for k in range(2, n + 1):
            if labeled.get(k, 0) < 1:
                raise InternalInvariant(f"no graph on {n} pairs has index {k}")
        for k in (2, n):
            if n >= 3 and len(representatives[k]) != 1:
                raise InternalInvariant(
                    f"index {k} on {n} pairs split into "
                    f"{len(representatives[k])} isomorphism classes"
                )

    return [
        CensusRow(n=n, k=k, labeled_count=labeled[k], iso_class_count=len(representatives[k]))
        for k in sorted(labeled)
    ]


def _stereotype_isomorphic(g1: StereotypeGraph, g2: StereotypeGraph) -> bool:
    return graph_isomorphic(g1.graph, g2.graph)


def _transversal_clique(g: StereotypeGraph, size: int) -> tuple[int, ...] | None:
    """Lexicographically smallest clique of the given size touching each
    pair at most once. Cliques of size 3+ never use an in-pair edge, so
    searching the cross-edges-only graph is exact; for size 2 it picks
    the smallest cross edge, which is what the expansion needs."""
    if g.n < 2:
        raise DomainError("a cross clique needs at least two pairs")
    cross_edges = {
        e for e in g.graph.edges if vertex_pair_side(e[0])[0] != vertex_pair_side(e[1])[0]
    }
    return find_clique_of_size(Graph(g.vertex_count, frozenset(cross_edges)), size)


def _validate_optimal_coloring(g: StereotypeGraph, coloring: Coloring) -> None:
    mapping = coloring.mapping
    if sorted(mapping) != list(range(g.vertex_count)):
        raise InvalidColoring("coloring must assign every vertex exactly once")
    if not coloring.is_proper(g.graph):
        raise InvalidColoring("coloring is not proper")
    palette = set(mapping.values())
    if palette != set(range(1, coloring.colors_used + 1)):
        raise InvalidColoring("colors must be exactly 1..colors_used")
    if coloring.colors_used != chromatic_number(g.graph):
        raise InvalidColoring(
            f"coloring uses {coloring.colors_used} colors but the index is "
            f"{chromatic_number(g.graph)}"
        )


def _assemble(g: StereotypeGraph, new_pair_bit: Callable[[int], int]) -> StereotypeGraph:
    m = g.n + 1
    bits = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            bits.append(new_pair_bit(i) if j == m else g.bit(i, j))
    return from_pattern(m, bits)


def expand_preserving(g: StereotypeGraph, coloring: Coloring) -> StereotypeGraph:
    """Add one pair wired so the given optimal coloring extends unchanged.

    The new pair takes colors 1 and 2; each old pair is matched so that
    color classes stay proper (a color-1 vertex is wired opposite the new
    color-1 vertex, then a color-2 vertex, then either matching). The
    result has one more pair and the same chromatic stability index.
    """
    _validate_optimal_coloring(g, coloring)
    theta = dict(coloring.mapping)

    def bit_for(i: int) -> int:
        c1 = theta[vertex_id(i, 1)]
        c2 = theta[vertex_id(i, 2)]
        if c1 == 1 or c2 == 1:
            p = 1 if c1 == 1 else 2
            return 1 if p == 1 else 0
        if c1 == 2 or c2 == 2:
            q = 1 if c1 == 2 else 2
            return 0 if q == 1 else 1
        return 0

    expanded = _assemble(g, bit_for)
    theta[vertex_id(g.n + 1, 1)] = 1
    theta[vertex_id(g.n + 1, 2)] = 2
    if not Coloring.from_mapping(theta).is_proper(expanded.graph):
        raise InternalInvariant("preserving expansion broke the extended coloring")
    return expanded


def expand_incrementing(g: StereotypeGraph, coloring: Coloring) -> StereotypeGraph:
    """Add one pair that raises the chromatic stability index by one.

    Builds a clique of size colors_used+1 through the new side-1 vertex:
    it is wired to every vertex of a smallest chi-clique, the mirror
    vertices then force the wiring of the new side-2 vertex, and when the
    mirror subgraph already shows all chi colors one mirror vertex swaps
    onto the new color. Remaining pairs are matched so the extended
    coloring stays proper.
    """
    _validate_optimal_coloring(g, coloring)
    t = coloring.colors_used
    clique = _transversal_clique(g, t)
    if clique is None:
        # The index can exceed the clique number (first at 5 pairs), and
        # the incrementing wiring is undefined without a clique to grow.
        # Graphs produced by build_with_csi always carry one.
        raise DomainError(
            f"graph has index {t} but no cross clique of that size; "
            "the incrementing expansion does not apply"
        )
    theta = dict(coloring.mapping)
    new_color = t + 1

    clique_side: dict[int, int] = {}
    for v in clique:
        pair, side = vertex_pair_side(v)
        clique_side[pair] = side

    mirror = [vertex_id(pair, 3 - side) for pair, side in sorted(clique_side.items())]
    mirror_colors = {theta[v] for v in mirror}
    if len(mirror_colors) < t:
        partner_color = min(c for c in range(1, t + 1) if c not in mirror_colors)
    else:
        first_pair, first_side = vertex_pair_side(min(clique))
        swap_vertex = vertex_id(first_pair, 3 - first_side)
        partner_color = theta[swap_vertex]
        theta[swap_vertex] = new_color

    def bit_for(i: int) -> int:
        if i in clique_side:
            return 0 if clique_side[i] == 1 else 1
        if theta[vertex_id(i, 1)] == partner_color:
            q = 1
        elif theta[vertex_id(i, 2)] == partner_color:
            q = 2
        else:
            q = 1
        return 0 if q == 1 else 1

    expanded = _assemble(g, bit_for)
    theta[vertex_id(g.n + 1, 1)] = new_color
    theta[vertex_id(g.n + 1, 2)] = partner_color
    if not Coloring.from_mapping(theta).is_proper(expanded.graph):
        raise InternalInvariant("incrementing expansion broke the extended coloring")
    return expanded


def build_with_csi(n: int, k: int) -> StereotypeGraph:
    """A stereotype graph on n pairs with chromatic stability index
    exactly k, grown from the 2-pair 4-cycle by n-k preserving steps and
    then k-2 incrementing steps; the final index is re-verified exactly."""
    if not 2 <= k <= n:
        raise RangeError(f"need 2 <= k <= n, got k={k}, n={n}")
    g = gen_complete_bipartite(2)
    for _ in range(n - k):
        g = expand_preserving(g, optimal_coloring(g.graph))
    for _ in range(k - 2):
        g = expand_incrementing(g, optimal_coloring(g.graph))
    achieved = chromatic_number(g.graph)
    if achieved != k or g.n != n:
        raise InternalInvariant(
            f"targeted construction reached n={g.n}, index {achieved}, "
            f"wanted n={n}, index {k}"
        )
    return g


def delete_edges(g: StereotypeGraph, removed: list[Edge]) -> Graph:
    """Plain graph left after deleting the listed edges; the result is
    generally no longer a stereotype graph but stays usable by every
    coloring operation."""
    graph = g.graph
    gone = []
    for u, v in removed:
        e = normalize_edge(u, v)
        if e not in graph.edges:
            raise EdgeAbsent(f"edge {e} is not present")
        gone.append(e)
    return graph.delete_edges(gone)


__all__ = [
    "CensusRow",
    "DEFAULT_ENUMERATION_BOUND",
    "PRNG_NAME",
    "build_with_csi",
    "census",
    "delete_edges",
    "enumerate_all",
    "expand_incrementing",
    "expand_preserving",
    "gen_complete_bipartite",
    "gen_complete_ladder",
    "gen_random",
    "splitmix64_stream",
]
