"""Integer matrix machinery: determinants, Smith normal form, and exact
solution of linear congruences on the torus R^n / Z^n.

The congruence solver is the local-side oracle for every fixed-point
enumeration in this package, so it deliberately shares no code with the
trace-side linear algebra: it works over plain Python ints via unimodular
row/column reduction.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import prod

from gmpy2 import mpq

IntMatrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    # Returns (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0.
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def int_det(m: IntMatrix) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("int_det requires a square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, list[int], IntMatrix]:
    """Diagonalize an integer matrix by unimodular transforms.

    Returns (U, d, V) with U*m*V == diag(d), U and V unimodular, the d[i]
    nonnegative and each dividing the next.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i1, i2, x, y, z, w):
        # (row i1, row i2) <- (x*row i1 + y*row i2, z*row i1 + w*row i2)
        for mat in (a, u):
            r1, r2 = mat[i1], mat[i2]
            for j in range(len(r1)):
                r1[j], r2[j] = x * r1[j] + y * r2[j], z * r1[j] + w * r2[j]

    def row_subtract(i_from, i_pivot, q):
        # row i_from -= q * row i_pivot, pivot row untouched
        for mat in (a, u):
            rf, rp = mat[i_from], mat[i_pivot]
            for j in range(len(rf)):
                rf[j] -= q * rp[j]

    def col_op(j1, j2, x, y, z, w):
        for mat in (a, v):
            for row in mat:
                row[j1], row[j2] = x * row[j1] + y * row[j2], z * row[j1] + w * row[j2]

    def col_subtract(j_from, j_pivot, q):
        for mat in (a, v):
            for row in mat:
                row[j_from] -= q * row[j_pivot]

    def swap_rows(i1, i2):
        a[i1], a[i2] = a[i2], a[i1]
        u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        for mat in (a, v):
            for row in mat:
                row[j1], row[j2] = row[j2], row[j1]

    k = 0
    limit = min(rows, cols)
    while k < limit:
        # Move a nonzero pivot of minimal absolute value to (k, k).
        pivot = None
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != k:
            swap_rows(k, pivot[0])
        if pivot[1] != k:
            swap_cols(k, pivot[1])

        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, rows):
                entry = a[i][k]
                if not entry:
                    continue
                pivot_val = a[k][k]
                if entry % pivot_val == 0:
                    row_subtract(i, k, entry // pivot_val)
                else:
                    # general unimodular combination; strictly shrinks |pivot|
                    x, y, g = xgcd(pivot_val, entry)
                    row_op(k, i, x, y, -(entry // g), pivot_val // g)
                    dirty = True
            for j in range(k + 1, cols):
                entry = a[k][j]
                if not entry:
                    continue
                pivot_val = a[k][k]
                if entry % pivot_val == 0:
                    col_subtract(j, k, entry // pivot_val)
                else:
                    x, y, g = xgcd(pivot_val, entry)
                    col_op(k, j, x, y, -(entry // g), pivot_val // g)
                    dirty = True
        # Enforce divisibility of the remaining block by the pivot.
        p = a[k][k]
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(k, offender, 1, 1, 0, 1)
            continue
        k += 1

    d = []
    for i in range(limit):
        val = a[i][i]
        if val < 0:
            for j in range(cols):
                a[i][j] = -a[i][j]
            for j in range(rows):
                u[i][j] = -u[i][j]
            val = -val
        d.append(val)
    return u, d, v


@lru_cache(maxsize=8192)
def _smith_cached(matrix_key: tuple) -> tuple:
    # Shared read-only SNF results; sweeps revisit the same small matrices
    # (one per multiplier difference) thousands of times.
    u, d, v = smith_normal_form([list(row) for row in matrix_key])
    return (
        tuple(tuple(row) for row in u),
        tuple(d),
        tuple(tuple(row) for row in v),
    )


def int_mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def int_mat_vec(a: IntMatrix, vec) -> list:
    return [sum(x * y for x, y in zip(row, vec)) for row in a]


class ToralCongruence:
    """All solutions x in [0,1)^n of M x = c (mod Z^n) for nonsingular M.

    With U M V = D (Smith form) and y = V^-1 x, the system becomes
    D y = U c (mod Z^n), so y_i runs over ((U c)_i + m_i) / d_i with
    m_i in {0, ..., d_i - 1}; there are exactly |det M| = prod(d_i)
    solutions, recovered as x = V y mod 1.
    """

    __slots__ = ("n", "diag", "count", "_base", "_cols")

    def __init__(self, m: IntMatrix, c):
        n = len(m)
        u, d, v = _smith_cached(tuple(tuple(int(x) for x in row) for row in m))
        if any(x == 0 for x in d) or len(d) < n:
            raise ZeroDivisionError("congruence matrix is singular")
        uc = [sum(u[i][j] * mpq(c[j]) for j in range(n)) for i in range(n)]
        self.n = n
        self.diag = d
        self.count = prod(d)
        # x = base + sum_i m_i * cols[i], entrywise mod 1
        self._base = [
            sum(v[j][i] * uc[i] / d[i] for i in range(n)) for j in range(n)
        ]
        self._cols = [
            [mpq(v[j][i], d[i]) for j in range(n)] for i in range(n)
        ]

    def solutions(self):
        """Yield each solution as a tuple of rationals in [0,1)."""
        base = self._base
        cols = self._cols
        if self.n == 1:
            c0 = cols[0][0]
            b0 = base[0]
            for m0 in range(self.diag[0]):
                yield ((b0 + m0 * c0) % 1,)
            return
        if self.n == 2:
            d0, d1 = self.diag
            (c00, c01), (c10, c11) = cols
            b0, b1 = base
            for m0 in range(d0):
                r0 = b0 + m0 * c00
                r1 = b1 + m0 * c01
                for m1 in range(d1):
                    yield ((r0 + m1 * c10) % 1, (r1 + m1 * c11) % 1)
            return
        for ms in product(*(range(di) for di in self.diag)):
            point = []
            for j in range(self.n):
                x = base[j]
                for i, mi in enumerate(ms):
                    if mi:
                        x = x + mi * cols[i][j]
                point.append(x % 1)
            yield tuple(point)
