"""Independent brute-force oracles used to freeze expected test values.

Every routine here deliberately takes a different algorithmic route from
the library implementation it checks: proper colorings are enumerated as
raw assignment tuples, chromatic polynomials come from deletion and
contraction, determinants from Laplace expansion or rational Gaussian
elimination, and triangles from the cube of the adjacency matrix. Keep
it that way; the point is that a shared bug cannot hide."""

from __future__ import annotations

import itertools
from fractions import Fraction

from stereograph.graphs import Graph, normalize_edge


def enumerate_coloring_count(graph: Graph, x: int) -> int:
    """Count proper colorings by checking every assignment in x^V."""
    if graph.vertex_count == 0:
        return 1
    if x == 0:
        return 0
    total = 0
    for assignment in itertools.product(range(x), repeat=graph.vertex_count):
        if all(assignment[u] != assignment[v] for u, v in graph.edges):
            total += 1
    return total


def deletion_contraction_coefficients(graph: Graph) -> tuple[int, ...]:
    """Chromatic polynomial by deletion and contraction, coefficients
    degree-descending. Contraction relabels vertices densely and drops
    parallel edges, so the recursion stays on simple graphs."""
    if not graph.edges:
        # Edgeless graph counts x^V colorings.
        return tuple([1] + [0] * graph.vertex_count)

    u, v = min(graph.edges)
    deleted = Graph(graph.vertex_count, graph.edges - {(u, v)})

    relabel = {}
    for w in range(graph.vertex_count):
        if w == v:
            relabel[w] = relabel.get(u, u)
        else:
            relabel[w] = w - 1 if w > v else w
    contracted_edges = {
        normalize_edge(relabel[a], relabel[b])
        for a, b in graph.edges
        if {a, b} != {u, v} and relabel[a] != relabel[b]
    }
    contracted = Graph(graph.vertex_count - 1, frozenset(contracted_edges))

    left = deletion_contraction_coefficients(deleted)
    right = deletion_contraction_coefficients(contracted)
    out = [0] * (graph.vertex_count + 1)
    for idx, c in enumerate(left):
        out[idx + (graph.vertex_count - len(left) + 1)] += c
    for idx, c in enumerate(right):
        out[idx + (graph.vertex_count - len(right) + 1)] -= c
    return tuple(out)


def laplace_determinant(matrix) -> int:
    """Determinant by cofactor expansion along the first row."""
    dim = len(matrix)
    if dim == 0:
        return 1
    if dim == 1:
        return matrix[0][0]
    total = 0
    for col in range(dim):
        if matrix[0][col] == 0:
            continue
        minor = [
            [matrix[r][c] for c in range(dim) if c != col] for r in range(1, dim)
        ]
        total += (-1) ** col * matrix[0][col] * laplace_determinant(minor)
    return total


def rational_gauss_determinant(matrix) -> int:
    """Determinant by exact rational Gaussian elimination."""
    dim = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    for k in range(dim):
        pivot = next((r for r in range(k, dim) if a[r][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for r in range(k + 1, dim):
            factor = a[r][k] / a[k][k]
            for c in range(k, dim):
                a[r][c] -= factor * a[k][c]
    det = Fraction(sign)
    for k in range(dim):
        det *= a[k][k]
    assert det.denominator == 1
    return int(det)


def trace_triangle_count(matrix) -> int:
    """Number of triangles as trace(A^3) / 6."""
    dim = len(matrix)
    a2 = [
        [sum(matrix[i][t] * matrix[t][j] for t in range(dim)) for j in range(dim)]
        for i in range(dim)
    ]
    trace3 = sum(
        sum(a2[i][t] * matrix[t][i] for t in range(dim)) for i in range(dim)
    )
    assert trace3 % 6 == 0
    return trace3 // 6


def char_matrix_at(matrix, x: int):
    dim = len(matrix)
    return [
        [(x if i == j else 0) - matrix[i][j] for j in range(dim)] for i in range(dim)
    ]
