import random

import pytest
from gmpy2 import mpq

from lefcorr.errors import PoincareDualityFailure
from lefcorr.exact_linalg import identity, mat_eq, mat_mul
from lefcorr.intlinalg import int_det
from lefcorr.scalars import ExactScalar
from lefcorr.trace_core import (
    DiagonalTerm,
    GradedMap,
    PairingData,
    alternating_trace,
    diagonal_class,
    dual_basis,
    exterior_power,
    increasing_tuples,
    shuffle_sign,
)


def exact(rows):
    return [[ExactScalar(x) for x in row] for row in rows]


def test_alternating_trace_identity_degree_zero():
    assert alternating_trace(GradedMap.from_blocks([[[1]]])) == 1


def test_alternating_trace_circle_doubling():
    # degree-0 block [1], degree-1 block [2]: 1 - 2
    assert alternating_trace(GradedMap.from_blocks([[[1]], [[2]]])) == -1


def test_alternating_trace_direct_arithmetic():
    assert alternating_trace(GradedMap.from_blocks([[[3]], [[5]], [[7]]])) == 5


def test_alternating_trace_empty_block():
    assert alternating_trace(GradedMap((2, 0), (exact([[1, 0], [0, 1]]), []))) == 2


def test_graded_map_shape_validation():
    with pytest.raises(ValueError):
        GradedMap((2,), (exact([[1]]),))
    with pytest.raises(ValueError):
        GradedMap((1, 1), (exact([[1]]),))


def test_alternating_trace_is_linear():
    random.seed(4)
    for _ in range(25):
        dims = [random.randint(0, 3) for _ in range(3)]
        def rand_map():
            return GradedMap(
                tuple(dims),
                tuple(
                    exact([[random.randint(-9, 9) for _ in range(d)] for _ in range(d)])
                    for d in dims
                ),
            )
        m1, m2 = rand_map(), rand_map()
        assert alternating_trace(m1 + m2) == alternating_trace(m1) + alternating_trace(m2)


def test_exterior_power_examples():
    assert exterior_power(exact([[2, 0], [0, 3]]), 2) == [[ExactScalar(6)]]
    assert mat_eq(exterior_power(exact([[1, 0], [0, 1]]), 1), identity(2))
    # brute-force determinant oracle: 1*4 - 2*3 = -2
    assert exterior_power(exact([[1, 2], [3, 4]]), 2) == [[ExactScalar(-2)]]


def test_exterior_power_degree_zero_and_range():
    assert exterior_power(exact([[5]]), 0) == [[ExactScalar(1)]]
    with pytest.raises(ValueError):
        exterior_power(exact([[5]]), 2)
    with pytest.raises(ValueError):
        exterior_power(exact([[5]]), -1)


def test_exterior_power_characteristic_polynomial_identity():
    # sum_k (-1)^k tr Lambda^k(M) = det(I - M), exact, random integer M
    random.seed(11)
    for _ in range(40):
        n = random.randint(1, 5)
        m = [[random.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        total = ExactScalar(0)
        for k in range(n + 1):
            lam = exterior_power(exact(m), k)
            tr = sum((lam[i][i] for i in range(len(lam))), ExactScalar(0))
            total = total - tr if k % 2 else total + tr
        i_minus_m = [
            [(1 if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)
        ]
        assert total == int_det(i_minus_m)


def circle_pairing():
    one = ExactScalar(1)
    return PairingData(
        (("1",), ("dx1",)),
        {0: [[one]], 1: [[one]]},
    )


def test_dual_basis_examples():
    p = circle_pairing()
    assert mat_eq(dual_basis(p, 0), identity(1))
    p2 = PairingData((("1",), ("dx1",)), {0: exact([[1]]), 1: exact([[2]])})
    assert dual_basis(p2, 1) == [[ExactScalar(mpq(1, 2))]]
    p3 = PairingData(
        (("a", "b"), ("x", "y")),
        {
            0: exact([[1, 0], [0, 1]]),
            1: exact([[0, 1], [-1, 0]]),
        },
    )
    assert dual_basis(p3, 1) == exact([[0, -1], [1, 0]])


def test_dual_basis_re_pairing_gives_identity():
    random.seed(7)
    for _ in range(25):
        n = random.randint(1, 4)
        while True:
            p = [[random.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            if int_det(p):
                break
        data = PairingData(
            (tuple(f"a{i}" for i in range(n)), tuple(f"b{i}" for i in range(n))),
            {0: exact(p), 1: exact(p)},
        )
        d = dual_basis(data, 1)
        assert mat_eq(mat_mul(exact(p), d), identity(n))


def test_dual_basis_singular_pairing():
    data = PairingData(
        (("a",), ("b",)),
        {0: exact([[0]]), 1: exact([[0]])},
    )
    with pytest.raises(PoincareDualityFailure):
        dual_basis(data, 0)


def test_diagonal_class_circle():
    terms = diagonal_class(circle_pairing()).terms
    assert terms == (
        DiagonalTerm(dual_degree=1, index=0, sign=-1),
        DiagonalTerm(dual_degree=0, index=1, sign=1),
    )


def test_diagonal_class_point():
    point = PairingData((("1",),), {0: [[ExactScalar(1)]]})
    terms = diagonal_class(point).terms
    assert len(terms) == 1
    assert terms[0].sign == 1


def test_diagonal_class_two_torus_sign_pattern():
    from lefcorr.torus import torus_pairing_data

    data = torus_pairing_data(2)
    assert data.dims == (1, 2, 1)
    terms = diagonal_class(data).terms
    assert len(terms) == 4
    # dual degree 2 and 0 positive, dual degree 1 negative
    assert [t.sign for t in terms] == [1, -1, -1, 1]
    assert [t.dual_degree for t in terms] == [2, 1, 1, 0]
    assert [t.index for t in terms] == [0, 1, 2, 3]


def test_diagonal_class_term_count_matches_total_betti():
    from lefcorr.torus import torus_pairing_data

    for n in range(1, 5):
        data = torus_pairing_data(n)
        assert len(diagonal_class(data).terms) == sum(data.dims) == 2**n


def test_shuffle_sign():
    assert shuffle_sign((), (0, 1)) == 1
    assert shuffle_sign((0,), (1,)) == 1
    assert shuffle_sign((1,), (0,)) == -1
    assert shuffle_sign((0, 1), (0,)) == 0
    assert shuffle_sign((0, 2), (1, 3)) == -1


def test_increasing_tuples_lexicographic():
    assert increasing_tuples(4, 2) == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    ]
