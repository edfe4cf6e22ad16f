"""Small dense linear algebra that works for Fraction and float alike.

Dimensions here are tiny (the ambient dimension, at most a handful), so the
implementations favor exactness and clarity over asymptotics.  Fraction
inputs go through plain Gaussian elimination with first-nonzero pivoting,
which stays exact; float inputs use partial pivoting by magnitude.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import SingularMatrixError
from .scalars import Scalar, is_exact_value


def _pivot_row(col: List[Scalar], start: int, exact: bool) -> int:
    """Index of the pivot row at or after ``start``, or -1 if the column is zero."""
    if exact:
        for r in range(start, len(col)):
            if col[r] != 0:
                return r
        return -1
    best, best_abs = -1, 0.0
    for r in range(start, len(col)):
        a = abs(col[r])
        if a > best_abs:
            best, best_abs = r, a
    return best if best_abs > 0.0 else -1


def det(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant of a square matrix, exact for rational entries."""
    n = len(rows)
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != n:
            raise ValueError("det requires a square matrix")
    if n == 0:
        return 1
    exact = all(is_exact_value(x) for r in m for x in r)
    if exact:
        # int entries would hit true division below; promote them
        m = [[Fraction(x) for x in r] for r in m]
    result = Fraction(1) if exact else 1.0
    for k in range(n):
        p = _pivot_row([m[r][k] for r in range(n)], k, exact)
        if p < 0:
            return result * 0
        if p != k:
            m[k], m[p] = m[p], m[k]
            result = -result
        pivot = m[k][k]
        result = result * pivot
        for r in range(k + 1, n):
            factor = m[r][k] / pivot
            if factor == 0:
                continue
            row, prow = m[r], m[k]
            for c in range(k + 1, n):
                row[c] = row[c] - factor * prow[c]
    return result


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> List[Scalar]:
    """Solve A x = b for square A.  Raises SingularMatrixError when rank-deficient."""
    n = len(rows)
    if len(rhs) != n:
        raise ValueError("rhs length must match matrix size")
    m = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for r in m:
        if len(r) != n + 1:
            raise ValueError("solve requires a square matrix")
    exact = all(is_exact_value(x) for r in m for x in r)
    if exact:
        m = [[Fraction(x) for x in r] for r in m]
    for k in range(n):
        p = _pivot_row([m[r][k] for r in range(n)], k, exact)
        if p < 0:
            raise SingularMatrixError(f"singular system (rank < {n})")
        if p != k:
            m[k], m[p] = m[p], m[k]
        pivot = m[k][k]
        for r in range(n):
            if r == k:
                continue
            factor = m[r][k] / pivot
            if factor == 0:
                continue
            row, prow = m[r], m[k]
            for c in range(k, n + 1):
                row[c] = row[c] - factor * prow[c]
    return [m[k][n] / m[k][k] for k in range(n)]


def int_det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant via fraction-free (Bareiss) elimination."""
    n = len(rows)
    m = [list(map(int, r)) for r in rows]
    for r in m:
        if len(r) != n:
            raise ValueError("int_det_bareiss requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def gram_det(vectors: Sequence[Sequence[Scalar]]) -> Scalar:
    """det(V V^T) for k row-vectors in R^d; proportional to the squared k-volume."""
    k = len(vectors)
    g = [[sum(a * b for a, b in zip(vectors[i], vectors[j])) for j in range(k)] for i in range(k)]
    return det(g)
