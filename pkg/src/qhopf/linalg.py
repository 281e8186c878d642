"""Exact dense linear algebra over a FieldDescriptor.

Matrices are lists of rows of Scalars.  Everything is deterministic:
elimination scans columns left to right and the returned bases are in
reduced row echelon form.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .scalars import FieldDescriptor, Scalar

Matrix = List[List[Scalar]]
Vector = List[Scalar]


def zeros(rows: int, cols: int, field: FieldDescriptor) -> Matrix:
    z = field.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(n: int, field: FieldDescriptor) -> Matrix:
    m = zeros(n, n, field)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(a: Matrix, b: Matrix, field: FieldDescriptor) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = zeros(n, m, field)
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c.is_zero():
                continue
            for j in range(m):
                if not b[t][j].is_zero():
                    out[i][j] = out[i][j] + c * b[t][j]
    return out


def mat_vec(a: Matrix, v: Vector, field: FieldDescriptor) -> Vector:
    out = [field.zero() for _ in a]
    for i, row in enumerate(a):
        acc = field.zero()
        for c, x in zip(row, v):
            if not c.is_zero() and not x.is_zero():
                acc = acc + c * x
        out[i] = acc
    return out


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot columns)."""
    m = [row[:] for row in m]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(m: Matrix, cols: int, field: FieldDescriptor) -> List[Vector]:
    """Echelon-form basis of the kernel of m (m may have zero rows)."""
    if not m:
        return [unit_vector(j, cols, field) for j in range(cols)]
    red, pivots = rref(m)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    zero, one = field.zero(), field.one()
    for j in free:
        v = [zero] * cols
        v[j] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][j]
        basis.append(v)
    return basis


def unit_vector(j: int, n: int, field: FieldDescriptor) -> Vector:
    v = [field.zero()] * n
    v[j] = field.one()
    return v


def solve_affine(m: Matrix, rhs: Vector, cols: int,
                 field: FieldDescriptor) -> Tuple[Optional[Vector], List[Vector]]:
    """Solve m x = rhs.  Returns (particular solution or None, kernel basis)."""
    aug = [row[:] + [b] for row, b in zip(m, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:  # pivot in the rhs column: inconsistent
        return None, nullspace(m, cols, field)
    particular = [field.zero()] * cols
    for r, pc in enumerate(pivots):
        particular[pc] = red[r][cols]
    return particular, nullspace(m, cols, field)


def invert(m: Matrix, field: FieldDescriptor) -> Optional[Matrix]:
    """Inverse of a square matrix, or None if singular."""
    n = len(m)
    aug = [row[:] + identity(n, field)[i] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]
