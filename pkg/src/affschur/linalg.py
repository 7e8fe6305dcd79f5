"""Exact rank, nullspace and solving over the rationals for sparse coordinate vectors.

Vectors are dicts ``coordinate -> coefficient``; the heavy lifting is done by
sympy's ``DomainMatrix`` over ``QQ``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> int | Fraction:
    value = Fraction(int(value.numerator), int(value.denominator))
    return value.numerator if value.denominator == 1 else value


def coordinate_index(vectors: Sequence[dict]) -> dict[Hashable, int]:
    keys = sorted({k for v in vectors for k in v}, key=repr)
    return {k: i for i, k in enumerate(keys)}


def columns_matrix(vectors: Sequence[dict], index: dict[Hashable, int]) -> DomainMatrix:
    """Matrix whose columns are the given vectors."""
    rows = {}
    for j, v in enumerate(vectors):
        for k, c in v.items():
            if c:
                rows.setdefault(index[k], {})[j] = _to_qq(c)
    return DomainMatrix(rows, (len(index), len(vectors)), QQ)


def rank(vectors: Sequence[dict]) -> int:
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    index = coordinate_index(vectors)
    return columns_matrix(vectors, index).to_dense().rank()


def nullspace(vectors: Sequence[dict]) -> list[list[int | Fraction]]:
    """Basis of ``{c : sum_j c_j vectors[j] = 0}`` as coefficient lists."""
    if not vectors:
        return []
    index = coordinate_index(vectors)
    if not index:
        return [[int(i == j) for i in range(len(vectors))] for j in range(len(vectors))]
    matrix = columns_matrix(vectors, index).to_dense()
    basis = matrix.nullspace().to_Matrix()
    return [[_from_qq(QQ.convert(basis[i, j])) for j in range(basis.cols)] for i in range(basis.rows)]


def solve(vectors: Sequence[dict], target: dict) -> list[int | Fraction] | None:
    """Coefficients ``c`` with ``sum_j c_j vectors[j] = target``, or ``None`` when inconsistent."""
    index = coordinate_index(list(vectors) + [target])
    if not index:
        return [0] * len(vectors)
    matrix = columns_matrix(list(vectors) + [target], index).to_dense()
    reduced, pivots = matrix.rref()
    n = len(vectors)
    if n in pivots:
        return None
    solution = [0] * n
    dense = reduced.to_Matrix()
    for row, col in enumerate(pivots):
        solution[col] = _from_qq(QQ.convert(dense[row, n]))
    return solution


def combine(vectors: Sequence[dict], coefficients: Sequence) -> dict:
    out: dict = {}
    for v, c in zip(vectors, coefficients):
        if not c:
            continue
        for k, a in v.items():
            value = out.get(k, 0) + c * a
            if value:
                out[k] = value
            else:
                out.pop(k, None)
    return out
