from itertools import permutations, product

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from lefcorr.intlinalg import (
    ToralCongruence,
    int_det,
    int_mat_mul,
    int_mat_vec,
    smith_normal_form,
    xgcd,
)


def permutation_det(m):
    """Independent determinant oracle: signed permutation expansion."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def square_matrices(max_size=4, bound=9):
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


@given(st.integers(-500, 500), st.integers(-500, 500))
@settings(max_examples=300, deadline=None)
def test_xgcd(a, b):
    x, y, g = xgcd(a, b)
    assert x * a + y * b == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


@given(square_matrices())
@settings(max_examples=150, deadline=None)
def test_int_det_against_permutation_expansion(m):
    assert int_det(m) == permutation_det(m)


@given(square_matrices())
@settings(max_examples=150, deadline=None)
def test_smith_normal_form_properties(m):
    u, d, v = smith_normal_form(m)
    prod_mat = int_mat_mul(int_mat_mul(u, m), v)
    n = len(m)
    for i in range(n):
        for j in range(n):
            assert prod_mat[i][j] == (d[i] if i == j else 0)
    assert abs(int_det(u)) == 1
    assert abs(int_det(v)) == 1
    assert all(x >= 0 for x in d)
    for i in range(len(d) - 1):
        if d[i]:
            assert d[i + 1] % d[i] == 0


def test_int_det_singular():
    assert int_det([[1, 2], [2, 4]]) == 0


def brute_solutions(m, c, count_hint):
    """Grid oracle: all solutions have denominators dividing
    |det m| * lcm(denominators of c)."""
    n = len(m)
    lcm = 1
    for x in c:
        q = mpq(x).denominator
        lcm = lcm * q // __import__("math").gcd(lcm, int(q))
    step = abs(int_det(m)) * lcm
    found = set()
    for coords in product(range(step), repeat=n):
        x = tuple(mpq(k, step) for k in coords)
        residual = int_mat_vec(m, x)
        if all((r - ci) % 1 == 0 for r, ci in zip(residual, c)):
            found.add(x)
    return found


@pytest.mark.parametrize(
    "m,c",
    [
        ([[1]], [0]),
        ([[3]], [mpq(1, 2)]),
        ([[-1, -1], [1, -1]], [0, 0]),
        ([[2, 1], [0, 2]], [mpq(1, 3), mpq(1, 2)]),
        ([[2, 0], [0, -3]], [mpq(2, 3), 0]),
    ],
)
def test_congruence_against_grid_oracle(m, c):
    cong = ToralCongruence(m, c)
    points = list(cong.solutions())
    assert len(points) == cong.count == abs(int_det(m))
    assert len(set(points)) == len(points)
    assert set(points) == brute_solutions(m, c, cong.count)
    for point in points:
        assert all(0 <= coord < 1 for coord in point)


def test_congruence_three_dimensional():
    m = [[2, 0, 1], [0, 1, 0], [1, 0, 1]]
    cong = ToralCongruence(m, [0, mpq(1, 2), 0])
    points = list(cong.solutions())
    assert len(points) == cong.count == abs(int_det(m))
    for point in points:
        residual = int_mat_vec(m, point)
        assert all(
            (r - ci) % 1 == 0
            for r, ci in zip(residual, [0, mpq(1, 2), 0])
        )


def test_congruence_rejects_singular():
    with pytest.raises(ZeroDivisionError):
        ToralCongruence([[1, 1], [1, 1]], [0, 0])
