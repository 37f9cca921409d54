"""Minimal immutable simple graphs and the structural algorithms used here.

Vertices are dense integers ``0..vertex_count-1``. Everything operates on
graphs small enough (at most a few dozen vertices) that straightforward
exact algorithms are the right tool; nothing in this module approximates.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise DomainError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        normalized = set()
        for u, v in edges:
            e = normalize_edge(u, v)
            if not (0 <= e[0] and e[1] < vertex_count):
                raise DomainError(f"edge {e} references a vertex outside 0..{vertex_count - 1}")
            normalized.add(e)
        return cls(vertex_count, frozenset(normalized))

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return len(self._bfs_distances(0)) == self.vertex_count

    def _bfs_distances(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int | None:
        """Greatest pairwise distance, or None when disconnected."""
        if self.vertex_count == 0:
            return None
        best = 0
        for v in range(self.vertex_count):
            dist = self._bfs_distances(v)
            if len(dist) != self.vertex_count:
                return None
            best = max(best, max(dist.values()))
        return best

    def girth(self) -> int | None:
        """Length of a shortest cycle, or None for a forest.

        Computed exactly: for every edge, the shortest alternative path
        between its endpoints (BFS with that edge removed) closes the
        shortest cycle through it.
        """
        best: int | None = None
        for u, v in self.edges:
            dist = {u: 0}
            queue = deque([u])
            while queue:
                x = queue.popleft()
                if x == v:
                    break
                for w in self._adjacency[x]:
                    if (x, w) in ((u, v), (v, u)):
                        continue
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        queue.append(w)
            if v in dist:
                cycle_len = dist[v] + 1
                if best is None or cycle_len < best:
                    best = cycle_len
        return best

    def triangles(self) -> list[tuple[int, int, int]]:
        """All triangles as sorted vertex triples, by explicit enumeration."""
        adj = self._adjacency
        found = []
        for u, v, w in itertools.combinations(range(self.vertex_count), 3):
            if v in adj[u] and w in adj[u] and w in adj[v]:
                found.append((u, v, w))
        return found

    def triangle_count(self) -> int:
        return len(self.triangles())

    def delete_edges(self, removed: Iterable[Edge]) -> "Graph":
        gone = {normalize_edge(u, v) for u, v in removed}
        return Graph(self.vertex_count, self.edges - gone)


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """One edge-preserving bijection from g1 onto g2, or None.

    Backtracking pruned by vertex invariants (degree and sorted neighbor
    degrees). A returned mapping is always re-verified by a direct
    edge-set comparison before being handed back.
    """
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    if g1.triangle_count() != g2.triangle_count():
        return None

    deg1, deg2 = g1.degrees(), g2.degrees()
    sig1 = [(deg1[v], tuple(sorted(deg1[w] for w in g1.neighbors(v)))) for v in range(n)]
    sig2 = [(deg2[v], tuple(sorted(deg2[w] for w in g2.neighbors(v)))) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None

    candidates = {v: [w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)}
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for x in g1.neighbors(v):
            if x in mapping and mapping[x] not in g2.neighbors(w):
                return False
        for x in range(n):
            if x in mapping and x not in g1.neighbors(v) and mapping[x] in g2.neighbors(w):
                return False
        return True

    def backtrack(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in candidates[v]:
            if w in used:
                continue
            if consistent(v, w):
                mapping[v] = w
                used.add(w)
                if backtrack(idx + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    if not backtrack(0):
        return None
    assert _mapping_preserves_edges(g1, g2, mapping)
    return dict(mapping)


def _mapping_preserves_edges(g1: Graph, g2: Graph, mapping: dict[int, int]) -> bool:
    image = {normalize_edge(mapping[u], mapping[v]) for u, v in g1.edges}
    return image == set(g2.edges)


def graph_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def max_clique_size(g: Graph) -> int:
    """Exact maximum clique size via bitmask backtracking."""
    n = g.vertex_count
    if n == 0:
        return 0
    masks = _neighbor_masks(g)
    best = 1

    def extend(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            extend(candidates & masks[v], size + 1)

    extend((1 << n) - 1, 0)
    return best


def find_clique_of_size(g: Graph, size: int) -> tuple[int, ...] | None:
    """Lexicographically smallest clique with exactly `size` vertices."""
    if size == 0:
        return ()
    masks = _neighbor_masks(g)
    chosen: list[int] = []

    def backtrack(candidates: int) -> bool:
        if len(chosen) == size:
            return True
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            if len(chosen) + 1 + (candidates & masks[v]).bit_count() < size:
                continue
            chosen.append(v)
            if backtrack(candidates & masks[v]):
                return True
            chosen.pop()
        return False

    if backtrack((1 << g.vertex_count) - 1):
        return tuple(chosen)
    return None


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks
