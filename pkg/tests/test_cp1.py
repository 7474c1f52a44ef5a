import random
import warnings

import pytest
from gmpy2 import mpq

from lefcorr.cp1 import (
    BundleSelfMap,
    GraphUnionCorrespondence,
    cohomology_action,
    fixed_point_data,
    lefschetz_global,
    local_fixed_point_sum,
    verify_ab_4_12,
    verify_conjecture2_union,
)
from lefcorr.errors import DegenerateEigenvalues, IrrationalEigenvaluesWarning
from lefcorr.exact_linalg import identity, inverse, mat_eq, mat_mul
from lefcorr.scalars import ExactScalar


def exact(rows):
    return [[ExactScalar(x) for x in row] for row in rows]


def evaluate_form(coeffs, z0, z1, d):
    """Value of sum_k coeffs[k] z0^(d-k) z1^k at an integer point."""
    total = ExactScalar(0)
    for k, c in enumerate(coeffs):
        total = total + c * z0 ** (d - k) * z1**k
    return total


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        BundleSelfMap([[1, 2], [2, 4]], 1)  # singular
    with pytest.raises(ValueError):
        BundleSelfMap([[1, 0], [0, 2]], -1)  # negative bundle degree
    with pytest.raises(ValueError):
        BundleSelfMap([[1, 0, 0], [0, 1, 0]], 1)


def test_cohomology_action_identity():
    for d in (0, 1, 4):
        m = BundleSelfMap([[1, 0], [0, 1]], d)
        assert mat_eq(cohomology_action(m), identity(d + 1))


def test_cohomology_action_diagonal():
    m = BundleSelfMap([[1, 0], [0, 5]], 1)
    assert cohomology_action(m) == exact([[1, 0], [0, 5]])


def test_cohomology_action_unipotent_triangular():
    m = BundleSelfMap([[1, 1], [0, 1]], 2)
    action = cohomology_action(m)
    # upper-triangular with unit diagonal: full binomial expansion of
    # (z0 + z1)^2, (z0 + z1) z1, z1^2
    assert action == exact([[1, 2, 1], [0, 1, 1], [0, 0, 1]])
    trace = sum((action[i][i] for i in range(3)), ExactScalar(0))
    assert trace == 3


def test_cohomology_action_substitution_oracle():
    # evaluate P(g v) at integer points and compare with the matrix rows
    rng = random.Random(9)
    for _ in range(20):
        d = rng.randint(0, 5)
        while True:
            g = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)]
            if g[0][0] * g[1][1] - g[0][1] * g[1][0]:
                break
        m = BundleSelfMap(g, d)
        action = cohomology_action(m)
        for _ in range(3):
            z0 = ExactScalar(rng.randint(-7, 7))
            z1 = ExactScalar(rng.randint(-7, 7))
            w0 = ExactScalar(g[0][0]) * z0 + ExactScalar(g[0][1]) * z1
            w1 = ExactScalar(g[1][0]) * z0 + ExactScalar(g[1][1]) * z1
            for k in range(d + 1):
                direct = w0 ** (d - k) * w1**k
                via_matrix = evaluate_form(action[k], z0, z1, d)
                assert direct == via_matrix


def test_lefschetz_global_examples():
    assert lefschetz_global(BundleSelfMap([[1, 0], [0, 2]], 1)) == 3
    assert lefschetz_global(BundleSelfMap([[1, 0], [0, 2]], 3)) == 15
    assert lefschetz_global(BundleSelfMap([[1, 0], [0, 1]], 5)) == 6


def test_fixed_point_data_diagonal():
    points = fixed_point_data(BundleSelfMap([[1, 0], [0, 2]], 1))
    by_eig = {p.eigenvalue: p for p in points}
    assert by_eig[ExactScalar(1)].differential == 2
    assert by_eig[ExactScalar(1)].phi_weight == 1
    assert by_eig[ExactScalar(2)].differential == ExactScalar(mpq(1, 2))
    assert by_eig[ExactScalar(2)].phi_weight == 2
    assert by_eig[ExactScalar(1)].location == (ExactScalar(1), ExactScalar(0))
    assert by_eig[ExactScalar(2)].location == (ExactScalar(0), ExactScalar(1))


def test_fixed_point_data_degenerate():
    with pytest.raises(DegenerateEigenvalues):
        fixed_point_data(BundleSelfMap([[3, 0], [0, 3]], 1))
    with pytest.raises(DegenerateEigenvalues):
        fixed_point_data(BundleSelfMap([[1, 1], [0, 1]], 2))


def test_fixed_point_data_swap_matrix():
    points = fixed_point_data(BundleSelfMap([[0, 1], [1, 0]], 0))
    assert {p.eigenvalue for p in points} == {ExactScalar(1), ExactScalar(-1)}
    assert all(p.phi_weight == 1 for p in points)
    assert all(p.differential == -1 for p in points)


def test_fixed_points_on_eigendirections():
    rng = random.Random(15)
    for _ in range(20):
        g = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
        m_exact = exact(g)
        det = m_exact[0][0] * m_exact[1][1] - m_exact[0][1] * m_exact[1][0]
        tr = m_exact[0][0] + m_exact[1][1]
        disc = tr * tr - ExactScalar(4) * det
        from lefcorr.scalars import exact_sqrt

        if not det or not disc or exact_sqrt(disc) is None:
            continue
        m = BundleSelfMap(g, 2)
        for p in fixed_point_data(m):
            v = p.location
            gv0 = m_exact[0][0] * v[0] + m_exact[0][1] * v[1]
            gv1 = m_exact[1][0] * v[0] + m_exact[1][1] * v[1]
            assert gv0 == p.eigenvalue * v[0]
            assert gv1 == p.eigenvalue * v[1]


def test_verify_examples():
    rep = verify_ab_4_12(BundleSelfMap([[1, 0], [0, 2]], 1))
    assert rep.match and rep.global_side == rep.local_side == "3"
    rep = verify_ab_4_12(BundleSelfMap([[2, 1], [0, 3]], 2))
    assert rep.match and rep.global_side == "19"  # h_2(2, 3) = 4 + 6 + 9


@pytest.mark.parametrize("lam", [ExactScalar(-1), ExactScalar(2), ExactScalar(mpq(3, 2))])
@pytest.mark.parametrize("d", [0, 1, 3, 6])
def test_geometric_series_identity(lam, d):
    m = BundleSelfMap([[ExactScalar(1), ExactScalar(0)], [ExactScalar(0), lam]], d)
    expected = sum((lam**k for k in range(d + 1)), ExactScalar(0))
    assert lefschetz_global(m) == expected
    local, is_exact = local_fixed_point_sum(m)
    assert is_exact and local == expected


def test_complete_homogeneous_trace_triangular():
    rng = random.Random(21)
    for _ in range(20):
        mu1, mu2 = rng.randint(-6, 6), rng.randint(-6, 6)
        if mu1 == 0 or mu2 == 0 or mu1 == mu2:
            continue
        d = rng.randint(0, 8)
        m = BundleSelfMap([[mu1, rng.randint(-6, 6)], [0, mu2]], d)
        h_d = sum(
            (ExactScalar(mu1) ** i * ExactScalar(mu2) ** (d - i) for i in range(d + 1)),
            ExactScalar(0),
        )
        assert lefschetz_global(m) == h_d
        assert verify_ab_4_12(m).match


def test_scaling_law():
    base = BundleSelfMap([[1, 0], [0, 2]], 3)
    base_points = {p.eigenvalue: p for p in fixed_point_data(base)}
    for s in (ExactScalar(2), ExactScalar(-1), ExactScalar(0, 1)):
        scaled = BundleSelfMap([[s * x for x in row] for row in base.g], 3)
        assert lefschetz_global(scaled) == lefschetz_global(base) * s**3
        for p in fixed_point_data(scaled):
            original = base_points[p.eigenvalue / s]
            assert p.differential == original.differential
            assert p.phi_weight == original.phi_weight * s**3
        assert verify_ab_4_12(scaled).match


def test_conjugation_invariance():
    m = BundleSelfMap([[2, 1], [0, 5]], 4)
    rep = verify_ab_4_12(m)
    for h in (exact([[1, 1], [0, 1]]), exact([[2, 1], [1, 1]]), exact([[0, 1], [-1, 3]])):
        conjugated = mat_mul(mat_mul(h, [list(r) for r in m.g]), inverse(h))
        rep2 = verify_ab_4_12(BundleSelfMap(conjugated, 4))
        assert rep2.global_side == rep.global_side
        assert rep2.local_side == rep.local_side
        assert rep2.match


def test_floating_fallback():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        m = BundleSelfMap([[1, 1], [1, 2]], 3)  # discriminant 5
        rep = verify_ab_4_12(m)
    assert any(w.category is IrrationalEigenvaluesWarning for w in caught)
    assert rep.match
    assert rep.tolerance == "1e-09"
    assert rep.global_side.startswith("~")
    assert rep.local_side.startswith("~")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IrrationalEigenvaluesWarning)
        points = fixed_point_data(BundleSelfMap([[1, 1], [1, 2]], 3))
    assert all(not p.exact for p in points)


def test_union_validation():
    with pytest.raises(ValueError):
        GraphUnionCorrespondence([])
    with pytest.raises(ValueError):
        GraphUnionCorrespondence(
            [BundleSelfMap([[1, 0], [0, 2]], 1), BundleSelfMap([[1, 0], [0, 2]], 2)]
        )


def test_union_examples():
    doubled = GraphUnionCorrespondence(
        [BundleSelfMap([[1, 0], [0, 2]], 1), BundleSelfMap([[1, 0], [0, 2]], 1)]
    )
    rep = verify_conjecture2_union(doubled)
    assert rep.match and rep.global_side == rep.local_side == "6"
    mixed = GraphUnionCorrespondence(
        [BundleSelfMap([[1, 0], [0, 2]], 1), BundleSelfMap([[1, 0], [0, 3]], 1)]
    )
    rep = verify_conjecture2_union(mixed)
    assert rep.match and rep.global_side == "7"
    assert rep.fixed_point_count == 4


def test_singleton_union_reduces_to_single_map():
    m = BundleSelfMap([[2, 1], [0, 3]], 2)
    single = verify_ab_4_12(m)
    union = verify_conjecture2_union(GraphUnionCorrespondence([m]))
    assert union.global_side == single.global_side
    assert union.local_side == single.local_side


def test_union_linearity_random():
    rng = random.Random(33)
    for _ in range(15):
        d = rng.randint(0, 6)
        branches = []
        for _ in range(rng.randint(1, 5)):
            while True:
                mu1, mu2 = rng.randint(-6, 6), rng.randint(-6, 6)
                if mu1 and mu2 and mu1 != mu2:
                    break
            branches.append(BundleSelfMap([[mu1, rng.randint(-6, 6)], [0, mu2]], d))
        union = GraphUnionCorrespondence(branches)
        rep = verify_conjecture2_union(union)
        assert rep.match
        total = sum((lefschetz_global(b) for b in branches), ExactScalar(0))
        assert rep.global_side == str(total)
