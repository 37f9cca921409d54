"""Exact integer polynomials in one variable.

Coefficients are arbitrary-precision integers stored degree-descending,
so for a polynomial of degree d written sum(c_i * x^(d-i)), entry i of
the coefficient tuple is c_i. No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InternalInvariant


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, coefficients degree-descending."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        """The coefficient c_i of x^(degree - i); 0 when i exceeds the degree."""
        if i < 0:
            raise IndexError(i)
        if i > self.degree:
            return 0
        return self.coefficients[i]

    def evaluate(self, x: int) -> int:
        value = 0
        for c in self.coefficients:
            value = value * x + c
        return value

    def __call__(self, x: int) -> int:
        return self.evaluate(x)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coefficients)


def interpolate_integer_polynomial(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """Exact polynomial through the given (x, y) points.

    Lagrange interpolation over exact rationals; the result must come out
    with integer coefficients, otherwise the inputs did not define an
    integer polynomial and an InternalInvariant is raised.
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    degree = len(points) - 1
    acc = [Fraction(0)] * (degree + 1)
    for xi, yi in points:
        # Numerator polynomial prod_{xj != xi} (x - xj), ascending coeffs.
        numer = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            numer = [Fraction(0)] + numer
            for k in range(len(numer) - 1):
                numer[k] -= xj * numer[k + 1]
        scale = Fraction(yi) / denom
        for k in range(len(numer)):
            acc[k] += scale * numer[k]
    coeffs_desc = list(reversed(acc))
    if any(c.denominator != 1 for c in coeffs_desc):
        raise InternalInvariant("interpolation did not yield integer coefficients")
    return IntPolynomial(tuple(int(c) for c in coeffs_desc))


def falling_factorial_coefficients(k: int) -> list[int]:
    """Ascending integer coefficients of x(x-1)...(x-k+1); [1] for k=0."""
    coeffs = [1]
    for step in range(k):
        shifted = [0] + coeffs
        coeffs = [shifted[t] - step * (coeffs[t] if t < len(coeffs) else 0) for t in range(len(shifted))]
    return coeffs


__all__ = [
    "IntPolynomial",
    "falling_factorial_coefficients",
    "interpolate_integer_polynomial",
]
