"""Exact dense matrix helpers over ``int``/``Fraction`` entries.

Matrices are tuples of row tuples so they can be hashed and compared
directly.  Entries that are integral Fractions are collapsed back to ``int``
to keep arithmetic on the fast path.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Matrix = tuple


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int) -> list:
    return [[0] * n for _ in range(n)]


def freeze(rows: Iterable[Sequence]) -> Matrix:
    return tuple(tuple(_norm(x) for x in row) for row in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(_norm(sum(x * y for x, y in zip(row, col) if x and y)) for col in bt)
        for row in a
    )


def matmul_all(mats: Iterable[Matrix], n: int) -> Matrix:
    out = identity(n)
    for m in mats:
        out = matmul(out, m)
    return out


def matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(_norm(sum(x * y for x, y in zip(row, v) if x and y)) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def is_diagonal(a: Matrix) -> bool:
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(len(a)) if i != j)


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the rationals; raises on singular input."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        if p != 1:
            m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return freeze(row[n:] for row in m)


def det(a: Sequence[Sequence]) -> int | Fraction:
    """Bareiss fraction-free elimination (exact division works over Q too)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    integral = all(isinstance(x, int) for row in m for x in row)
    if not integral:
        m = [[Fraction(x) for x in row] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = row_i[j] * pk - mik * row_k[j]
                row_i[j] = num // prev if integral else num / prev
        prev = pk
    return _norm(sign * m[n - 1][n - 1])


def minor(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> int | Fraction:
    """Determinant of the submatrix on 0-based ``rows`` x ``cols``."""
    return det([[a[r][c] for c in cols] for r in rows])


def subsets(n: int, k: int):
    return combinations(range(n), k)


def parse_rational(token: str) -> int | Fraction:
    return _norm(Fraction(token))


def format_rational(x) -> str:
    x = _norm(x)
    return str(x)
