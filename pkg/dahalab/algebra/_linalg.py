from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from sympy.polys.matrices import DomainMatrix

__all__ = ['kernel', 'rank', 'coordinates', 'matrix', 'identity', 'is_zero']
log = logging.getLogger(__name__)

Vector = list[Any]
Rows = Sequence[Sequence[Any]]


def matrix(rows: Rows, domain: Any, ncols: int | None = None) -> DomainMatrix:
    """Dense :class:`DomainMatrix` from a list of rows of domain elements."""
    rows = [[domain.convert(v) for v in row] for row in rows]
    ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix(rows, (len(rows), ncols), domain)


def identity(size: int, domain: Any) -> DomainMatrix:
    return DomainMatrix.eye(size, domain).to_dense()


def is_zero(a: DomainMatrix) -> bool:
    return bool(a.is_zero_matrix)


def kernel(rows: Rows, domain: Any, ncols: int) -> list[Vector]:
    """
    Basis of ``{v : M v = 0}`` for the matrix with the given rows.

    Returns:
        Basis vectors, in the reduced row echelon normalization of sympy (deterministic for a fixed matrix).
    """
    if not rows:
        return [[domain.one if i == j else domain.zero for j in range(ncols)] for i in range(ncols)]
    null = matrix(rows, domain, ncols).nullspace()
    return [list(row) for row in null.to_list()]


def rank(vectors: Sequence[Vector], domain: Any) -> int:
    if not vectors:
        return 0
    return int(matrix(vectors, domain).rank())


def coordinates(vector: Vector, basis: Sequence[Vector], domain: Any) -> Vector | None:
    """
    Coordinates ``c`` with ``vector = sum c_i basis_i``, or None when the vector is outside the span.

    Dependent basis vectors are allowed; their free coordinates are set to zero.
    """
    size = len(vector)
    if not basis:
        return [] if all(not v for v in vector) else None

    # Columns are basis vectors, augmented with the target
    cols = len(basis)
    aug = [[basis[j][i] for j in range(cols)] + [vector[i]] for i in range(size)]
    reduced, pivots = matrix(aug, domain, cols + 1).rref()
    if cols in pivots:
        return None

    values = reduced.to_list()
    coords = [domain.zero] * cols
    for row, p in enumerate(pivots):
        coords[p] = values[row][cols]
    return coords
