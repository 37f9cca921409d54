"""Pair merging and the reduction that decides bipartite stability.

Merging two pairs collapses the two non-adjacent cross couples of their
induced 4-cycle into equivalence classes; a class is adjacent to a vertex
exactly when any of its members was. A graph is bipartitely stable when
n-1 successive merges shrink it to a single pair (K_2); a merge is
blocked exactly when the two pairs induce a triangle, and once any
triangle exists no continuation can ever reach K_2, because adjacent
vertices are never absorbed into one class.

Surviving merged pairs are relabeled with the smaller pair index, and the
class containing that pair's side-1 vertex keeps side 1, so reductions
are fully deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidOrder, PairAbsent, TooLarge
from .graphs import Edge, normalize_edge
from .model import StereotypeGraph, vertex_id

Triangle = tuple[int, int, int]
ClassPartition = frozenset[frozenset[int]]

ORDER_ENUMERATION_BOUND = 5


@dataclass(frozen=True)
class PairedGraph:
    """A graph on surviving pairs mid-reduction.

    `pairs` lists the alive pair labels; vertex ids reuse the dense
    encoding of the labels' original positions. `classes` maps each
    current vertex to the frozenset of original vertex ids it represents.
    Unlike a stereotype graph, two alive pairs may induce more than a
    4-cycle here.
    """

    n_original: int
    pairs: tuple[int, ...]
    edges: frozenset[Edge]
    classes: tuple[tuple[int, frozenset[int]], ...]

    @classmethod
    def from_stereotype(cls, g: StereotypeGraph) -> "PairedGraph":
        classes = tuple(
            (v, frozenset([v])) for v in range(g.vertex_count)
        )
        return cls(
            n_original=g.n,
            pairs=tuple(range(1, g.n + 1)),
            edges=g.graph.edges,
            classes=classes,
        )

    @property
    def class_map(self) -> dict[int, frozenset[int]]:
        return dict(self.classes)

    def pair_vertices(self, label: int) -> tuple[int, int]:
        return vertex_id(label, 1), vertex_id(label, 2)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def class_partition(self) -> ClassPartition:
        return frozenset(members for _, members in self.classes)


@dataclass(frozen=True)
class MergeOutcome:
    """Result of one merge attempt: a new graph, or a blocking triangle."""

    graph: PairedGraph | None = None
    blocking_triangle: Triangle | None = None

    @property
    def merged(self) -> bool:
        return self.graph is not None


@dataclass(frozen=True)
class MergeStep:
    merged_pair: tuple[int, int]
    classes: tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    final_graph: PairedGraph
    steps: tuple[MergeStep, ...] = ()
    blocking_witness: Triangle | None = None


def merge_pairs(pg: PairedGraph, i: int, j: int) -> MergeOutcome:
    """Merge pairs i and j, or report the triangle blocking the merge."""
    if i == j:
        raise PairAbsent(f"cannot merge pair {i} with itself")
    for label in (i, j):
        if label not in pg.pairs:
            raise PairAbsent(f"pair {label} is not alive")

    a1, a2 = pg.pair_vertices(i)
    b1, b2 = pg.pair_vertices(j)
    quad = (a1, a2, b1, b2)
    for tri in itertools.combinations(quad, 3):
        if all(pg.has_edge(u, v) for u, v in itertools.combinations(tri, 2)):
            return MergeOutcome(blocking_triangle=tuple(sorted(tri)))

    # The induced subgraph is a 4-cycle: each vertex of pair i misses
    # exactly one vertex of pair j. The two non-adjacent couples become
    # the new classes.
    partner = {a1: b2 if pg.has_edge(a1, b1) else b1}
    partner[a2] = b1 if partner[a1] == b2 else b2
    couple_one = frozenset([a1, partner[a1]])
    couple_two = frozenset([a2, partner[a2]])

    survivor = min(i, j)
    removed = max(i, j)
    v1, v2 = pg.pair_vertices(survivor)
    side_one = couple_one if v1 in couple_one else couple_two
    side_two = couple_two if side_one is couple_one else couple_one

    old_classes = pg.class_map
    new_classes = {
        v: members for v, members in old_classes.items() if v not in quad
    }
    new_classes[v1] = frozenset().union(*(old_classes[m] for m in side_one))
    new_classes[v2] = frozenset().union(*(old_classes[m] for m in side_two))

    survivors = [v for v in old_classes if v not in quad]
    new_edges: set[Edge] = set()
    for u, v in pg.edges:
        if u not in quad and v not in quad:
            new_edges.add((u, v))
    for w in survivors:
        if any(pg.has_edge(w, m) for m in side_one):
            new_edges.add(normalize_edge(w, v1))
        if any(pg.has_edge(w, m) for m in side_two):
            new_edges.add(normalize_edge(w, v2))
    new_edges.add(normalize_edge(v1, v2))

    merged = PairedGraph(
        n_original=pg.n_original,
        pairs=tuple(p for p in pg.pairs if p != removed),
        edges=frozenset(new_edges),
        classes=tuple(sorted(new_classes.items())),
    )
    return MergeOutcome(graph=merged)


def reduce_to_k2(
    g: StereotypeGraph, order: Sequence[tuple[int, int]] | None = None
) -> StabilityVerdict:
    """Apply n-1 merges (given order, else lexicographic) until one pair
    remains or a merge blocks; stable exactly when K_2 is reached."""
    pg = PairedGraph.from_stereotype(g)
    steps: list[MergeStep] = []

    if order is not None:
        order = list(order)
        if len(order) != max(g.n - 1, 0):
            raise InvalidOrder(
                f"expected {max(g.n - 1, 0)} merges for n={g.n}, got {len(order)}"
            )

    step_index = 0
    while len(pg.pairs) > 1:
        if order is not None:
            i, j = order[step_index]
            if i not in pg.pairs or j not in pg.pairs or i == j:
                raise InvalidOrder(
                    f"step {step_index}: pair ({i}, {j}) is not alive in {pg.pairs}"
                )
        else:
            i, j = pg.pairs[0], pg.pairs[1]
        outcome = merge_pairs(pg, i, j)
        if not outcome.merged:
            return StabilityVerdict(
                stable=False,
                final_graph=pg,
                steps=tuple(steps),
                blocking_witness=outcome.blocking_triangle,
            )
        pg = outcome.graph
        survivor = min(i, j)
        v1, v2 = pg.pair_vertices(survivor)
        class_map = pg.class_map
        steps.append(MergeStep((i, j), (class_map[v1], class_map[v2])))
        step_index += 1

    return StabilityVerdict(stable=True, final_graph=pg, steps=tuple(steps))


def check_order_invariance(g: StereotypeGraph, bound: int = ORDER_ENUMERATION_BOUND) -> bool:
    """True iff every complete merge order yields the same verdict and,
    for stable graphs, the same final class partition."""
    if g.n > bound:
        raise TooLarge(f"order enumeration bounded at n <= {bound}, got n={g.n}")

    verdicts: set[bool] = set()
    partitions: set[ClassPartition] = set()

    def walk(pg: PairedGraph) -> None:
        if len(pg.pairs) == 1:
            verdicts.add(True)
            partitions.add(pg.class_partition())
            return
        for i, j in itertools.combinations(pg.pairs, 2):
            outcome = merge_pairs(pg, i, j)
            if outcome.merged:
                walk(outcome.graph)
            else:
                verdicts.add(False)

    walk(PairedGraph.from_stereotype(g))
    if len(verdicts) != 1:
        return False
    if verdicts == {True} and len(partitions) != 1:
        return False
    return True


__all__ = [
    "MergeOutcome",
    "MergeStep",
    "ORDER_ENUMERATION_BOUND",
    "PairedGraph",
    "StabilityVerdict",
    "check_order_invariance",
    "merge_pairs",
    "reduce_to_k2",
]
