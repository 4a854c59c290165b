from fractions import Fraction
from typing import Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

Vector = tuple[Fraction, ...]
RationalMatrix = list[list[Fraction]]


def to_qq(value: Fraction | int) -> object:
    fraction = Fraction(value)
    return QQ(fraction.numerator, fraction.denominator)


def from_qq(value: object) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))  # type: ignore


def rational_domain_matrix(rows: Sequence[Sequence[Fraction | int]], columns: int) -> DomainMatrix:
    entries = [[to_qq(value) for value in row] for row in rows]
    return DomainMatrix(entries, (len(rows), columns), QQ)


def rank(rows: Sequence[Sequence[Fraction | int]], columns: int) -> int:
    """Exact rank over the rationals; empty shapes have rank zero."""

    if len(rows) == 0 or columns == 0:
        return 0

    return int(rational_domain_matrix(rows=rows, columns=columns).rank())


def row_reduce(
    rows: Sequence[Sequence[Fraction | int]], columns: int
) -> tuple[RationalMatrix, tuple[int, ...]]:
    """
    Reduced row echelon form with leftmost pivots.

    Returns the nonzero rows of the RREF and the pivot columns, in order.
    """

    if len(rows) == 0 or columns == 0:
        return [], ()

    reduced, pivots = rational_domain_matrix(rows=rows, columns=columns).rref()
    reduced_rows = [[from_qq(value) for value in row] for row in reduced.to_list()]

    return reduced_rows[: len(pivots)], tuple(int(pivot) for pivot in pivots)


def in_span(vector: Sequence[Fraction | int], basis: Sequence[Sequence[Fraction | int]]) -> bool:
    columns = len(vector)
    return rank(rows=list(basis) + [vector], columns=columns) == rank(rows=basis, columns=columns)


def integer_invariant_factors(rows: Sequence[Sequence[int]], columns: int) -> list[int]:
    """Nonzero invariant factors (Smith normal form diagonal) of an integer matrix."""

    if len(rows) == 0 or columns == 0:
        return []

    entries = [[ZZ(int(value)) for value in row] for row in rows]
    matrix = DomainMatrix(entries, (len(rows), columns), ZZ)
    factors = [abs(int(factor)) for factor in invariant_factors(matrix)]

    return [factor for factor in factors if factor != 0]


def abelian_invariants(rows: Sequence[Sequence[int]], columns: int) -> tuple[int, list[int]]:
    """Free rank and torsion coefficients of Z^columns modulo the row lattice."""

    factors = integer_invariant_factors(rows=rows, columns=columns)
    torsion = [factor for factor in factors if factor > 1]

    return columns - len(factors), torsion


def matrix_vector(matrix: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> Vector:
    return tuple(
        sum((entry * value for entry, value in zip(row, vector)), Fraction(0)) for row in matrix
    )


def unit_vector(size: int, position: int) -> Vector:
    return tuple(Fraction(1) if i == position else Fraction(0) for i in range(size))


def zero_vector(size: int) -> Vector:
    return tuple(Fraction(0) for _ in range(size))
