"""Dense matrix helpers over ExactScalar.

Matrices are plain lists of lists (row major).  Everything here is a pure
function; inputs are never mutated.  Entries may be given as ints or
rationals and are promoted to ExactScalar.
"""

from __future__ import annotations

from .scalars import ExactScalar

Matrix = list[list[ExactScalar]]

_ZERO = ExactScalar(0)
_ONE = ExactScalar(1)


def as_exact_matrix(rows) -> Matrix:
    out = []
    width = None
    for row in rows:
        r = [x if isinstance(x, ExactScalar) else ExactScalar(x) for x in row]
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise ValueError("ragged matrix")
        out.append(r)
    return out


def identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        raise ValueError("shape mismatch in mat_add")
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(s, a: Matrix) -> Matrix:
    s = s if isinstance(s, ExactScalar) else ExactScalar(s)
    return [[s * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    bt = list(zip(*b))
    return [
        [sum((x * y for x, y in zip(row, col)), _ZERO) for col in bt]
        for row in a
    ]


def mat_vec(a: Matrix, v) -> list:
    return [sum((x * y for x, y in zip(row, v)), _ZERO) for row in a]


def trace(a: Matrix) -> ExactScalar:
    return sum((a[i][i] for i in range(len(a))), _ZERO)


def transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)]


def det(a: Matrix) -> ExactScalar:
    """Determinant by Gaussian elimination with exact division."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("det requires a square matrix")
    m = [list(row) for row in a]
    result = _ONE
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return _ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result = result * p
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / p
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return result


def inverse(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse requires a square matrix")
    m = [list(row) + list(idr) for row, idr in zip(a, identity(n))]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )
