"""Exact dense linear algebra over a sigma-field's underlying field.

Plain Gaussian elimination with first-nonzero pivoting; the arithmetic is
exact, so no pivot heuristics are needed and results are deterministic.
Matrices are lists of rows of FieldElement.
"""

from __future__ import annotations


def rank(rows):
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if not m[i][col].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col].inverse()
        m[r] = [inv * v for v in m[r]]
        for i in range(nrows):
            if i != r and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def det(rows, field=None):
    """Determinant of a square matrix (the empty matrix has determinant 1)."""
    if not rows:
        if field is None:
            raise ValueError("empty determinant needs an explicit field")
        return field.one
    n = len(rows)
    assert all(len(r) == n for r in rows), "determinant of a non-square matrix"
    field = rows[0][0].field
    m = [list(r) for r in rows]
    sign = 1
    acc = field.one
    for col in range(n):
        pivot = next((i for i in range(col, n) if not m[i][col].is_zero()), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        piv = m[col][col]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(col + 1, n):
            if not m[i][col].is_zero():
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return acc if sign == 1 else -acc


def solve(rows, rhs):
    """One solution of A x = b, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    if not rows:
        return []
    field = rhs[0].field if rhs else rows[0][0].field
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if not m[i][col].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col].inverse()
        m[r] = [inv * v for v in m[r]]
        for i in range(nrows):
            if i != r and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not m[i][-1].is_zero():
            return None
    x = [field.zero] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][-1]
    return x
