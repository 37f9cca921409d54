"""Exact adjacency-matrix algebra for stereotype graphs.

Everything here is arbitrary-precision integer arithmetic; the stability
criteria in this module are exact equalities, so no floating point is
allowed anywhere. The characteristic polynomial is obtained by evaluating
det(xI - A) at dim+1 integer points with fraction-free (Bareiss)
elimination and interpolating exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InternalInvariant
from .graphs import Graph
from .model import StereotypeGraph
from .polynomials import IntPolynomial, interpolate_integer_polynomial

IntMatrix = tuple[tuple[int, ...], ...]


def adjacency_matrix(graph: Graph | StereotypeGraph) -> IntMatrix:
    """Symmetric 0/1 adjacency matrix in canonical vertex-id order."""
    if isinstance(graph, StereotypeGraph):
        graph = graph.graph
    n = graph.vertex_count
    rows = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    return tuple(tuple(row) for row in rows)


def identity_matrix(dim: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


def ones_matrix(dim: int) -> IntMatrix:
    return tuple(tuple(1 for _ in range(dim)) for _ in range(dim))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    dim = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: int, a: IntMatrix) -> IntMatrix:
    return tuple(tuple(c * x for x in row) for row in a)


def bareiss_determinant(matrix: IntMatrix) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _char_matrix(matrix: IntMatrix, x: int) -> IntMatrix:
    dim = len(matrix)
    return tuple(
        tuple((x if i == j else 0) - matrix[i][j] for j in range(dim))
        for i in range(dim)
    )


@lru_cache(maxsize=8192)
def characteristic_polynomial(matrix: IntMatrix) -> IntPolynomial:
    """Exact coefficients of det(xI - matrix), monic of degree dim."""
    dim = len(matrix)
    if any(len(row) != dim for row in matrix):
        raise DomainError("matrix must be square")
    points = [(x, bareiss_determinant(_char_matrix(matrix, x))) for x in range(dim + 1)]
    poly = interpolate_integer_polynomial(points)
    if poly.degree != dim or poly.coefficient(0) != 1:
        raise InternalInvariant("characteristic polynomial is not monic of full degree")
    return poly


@dataclass(frozen=True)
class CoefficientIdentityReport:
    """Observed leading characteristic coefficients and their expected laws."""

    n: int
    c0: int
    c1: int
    c2: int
    c3: int
    triangle_count: int

    @property
    def c0_is_one(self) -> bool:
        return self.c0 == 1

    @property
    def c1_is_zero(self) -> bool:
        return self.c1 == 0

    @property
    def c2_is_minus_n_squared(self) -> bool:
        return self.c2 == -self.n * self.n

    @property
    def c3_nonpositive(self) -> bool:
        return self.c3 <= 0

    @property
    def c3_divisible_by_four(self) -> bool:
        return self.c3 % 4 == 0

    @property
    def c3_counts_triangles(self) -> bool:
        return self.c3 == -2 * self.triangle_count

    @property
    def all_hold(self) -> bool:
        return (
            self.c0_is_one
            and self.c1_is_zero
            and self.c2_is_minus_n_squared
            and self.c3_nonpositive
            and self.c3_divisible_by_four
            and self.c3_counts_triangles
        )


def coefficient_identities(g: StereotypeGraph) -> CoefficientIdentityReport:
    """Check the leading coefficient laws of the characteristic polynomial."""
    _require_at_least_two_pairs(g)
    poly = characteristic_polynomial(adjacency_matrix(g))
    return CoefficientIdentityReport(
        n=g.n,
        c0=poly.coefficient(0),
        c1=poly.coefficient(1),
        c2=poly.coefficient(2),
        c3=poly.coefficient(3),
        triangle_count=g.graph.triangle_count(),
    )


def matrix_criterion(g: StereotypeGraph) -> bool:
    """Stability via the identity A^2 + nA = nJ, checked entrywise."""
    _require_at_least_two_pairs(g)
    a = adjacency_matrix(g)
    lhs = mat_add(mat_mul(a, a), mat_scale(g.n, a))
    return lhs == mat_scale(g.n, ones_matrix(2 * g.n))


def characteristic_criterion(g: StereotypeGraph) -> bool:
    """Stability via a vanishing third characteristic coefficient."""
    _require_at_least_two_pairs(g)
    poly = characteristic_polynomial(adjacency_matrix(g))
    return poly.coefficient(3) == 0


def minor_criterion(g: StereotypeGraph) -> bool:
    """Stability via the absence of the 3x3 all-off-diagonal-ones principal
    submatrix, i.e. the absence of a triangle."""
    return g.graph.triangle_count() == 0


TRIANGLE_MINOR = ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def principal_submatrix(matrix: IntMatrix, indices: tuple[int, ...]) -> IntMatrix:
    return tuple(tuple(matrix[i][j] for j in indices) for i in indices)


def srg_check(g: StereotypeGraph) -> tuple[int, int, int, int] | None:
    """Strongly-regular parameters (2n, n, 0, n) when every adjacent vertex
    pair shares 0 neighbors and every non-adjacent pair shares exactly n;
    None otherwise. When parameters are found, the quadratic identity
    A^2 + (q-p)A = (k-q)I + qJ is verified as an internal check."""
    graph = g.graph
    n = g.n
    for u, v in itertools.combinations(range(graph.vertex_count), 2):
        common = len(graph.neighbors(u) & graph.neighbors(v))
        if graph.has_edge(u, v):
            if common != 0:
                return None
        elif common != n:
            return None
    params = (2 * n, n, 0, n)
    if not srg_identity_holds(adjacency_matrix(g), *params):
        raise InternalInvariant(f"srg identity failed for parameters {params}")
    return params


def srg_identity_holds(a: IntMatrix, v: int, k: int, p: int, q: int) -> bool:
    """Whether A^2 + (q-p)A = (k-q)I + qJ for the given parameters."""
    dim = len(a)
    lhs = mat_add(mat_mul(a, a), mat_scale(q - p, a))
    rhs = mat_add(mat_scale(k - q, identity_matrix(dim)), mat_scale(q, ones_matrix(dim)))
    return lhs == rhs


def _require_at_least_two_pairs(g: StereotypeGraph) -> None:
    if g.n < 2:
        raise DomainError("criterion requires at least two pairs")


__all__ = [
    "CoefficientIdentityReport",
    "IntMatrix",
    "TRIANGLE_MINOR",
    "adjacency_matrix",
    "bareiss_determinant",
    "characteristic_criterion",
    "characteristic_polynomial",
    "coefficient_identities",
    "identity_matrix",
    "mat_add",
    "mat_mul",
    "mat_scale",
    "matrix_criterion",
    "minor_criterion",
    "ones_matrix",
    "principal_submatrix",
    "srg_check",
    "srg_identity_holds",
]
