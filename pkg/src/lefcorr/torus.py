"""Smooth correspondences on the n-torus T^n = R^n / Z^n.

A correspondence is the solution locus

    Gamma = {(x, y) in T^n x T^n : A x = B y + c  (mod Z^n)}

for integer matrices A, B with nonzero determinant and a rational offset
c.  The coordinate projections are covering maps: fixing x leaves |det B|
choices of y, so deg pi_1 = |det B|, and symmetrically deg pi_2 = |det A|.
Gamma need not be connected; everything below only uses the relation
A dx = B dy between the coordinate 1-forms, which holds on every
component.

Cohomology action (global side).  On Gamma, dy = B^-1 A dx, so the
pullback pi_2^* sends the degree-k monomial forms dy_J to the exterior
power Lambda^k(B^-1 A) applied to the dx basis, and the pushforward
pi_1_* multiplies by deg pi_1 = |det B| (fiberwise summation over the
sheets of pi_1, which satisfies pi_1_* pi_1^* = deg pi_1).  Hence

    blocks[k] = |det B| * Lambda^k(B^-1 A)

in the lexicographic dx basis of H^k(T^n), and the alternating trace has
the closed form |det B| * det(I - B^-1 A) = sign(det B) * det(B - A),
which is checked internally on every call.

Fixed points (local side).  Fixed points solve (A - B) x = c (mod Z^n);
for transversal correspondences (det(A - B) != 0) there are exactly
|det(A - B)| of them, enumerated by Smith normal form, a route that shares
no code with the trace side.  Orientation convention: Gamma is oriented by
pulling back the orientation of T^n along pi_1.  Locally Gamma is then the
graph of h(x) = B^-1 (A x - c), so every fixed point has the graph index
sign det(I - Dh) = sign det(I - B^-1 A) = sign(det B) * sign(det(B - A)),
the same value at every point.  The opposite orientation convention would
flip the sign of both sides of the fixed-point identity coherently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from gmpy2 import mpq

from .errors import NonTransversal, NotACovering
from .exact_linalg import as_exact_matrix, inverse, mat_mul
from .intlinalg import ToralCongruence, int_det, int_mat_vec
from .reports import VerificationReport
from .scalars import ExactScalar
from .textio import format_int_matrix, format_rational_vector
from .trace_core import (
    GradedMap,
    PairingData,
    alternating_trace,
    diagonal_class,
    dual_basis,
    exterior_power,
    increasing_tuples,
    shuffle_sign,
)

__all__ = [
    "TorusCorrespondence",
    "TorusFixedPoint",
    "validate",
    "induced_map",
    "lefschetz_global",
    "fixed_points",
    "fixed_point_count",
    "fixed_point_index",
    "verify_theorem",
    "integral_check",
    "torus_pairing_data",
]

# verify_theorem enumerates and re-checks every fixed point up to this
# count; beyond it the local sum uses count * index directly (the index is
# the same at every point, so the value is identical).
ENUMERATION_LIMIT = 512


@dataclass(frozen=True)
class TorusCorrespondence:
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    c: tuple

    def __init__(self, A, B, c=None):
        A = tuple(tuple(int(x) for x in row) for row in A)
        B = tuple(tuple(int(x) for x in row) for row in B)
        n = len(A)
        if any(len(row) != n for row in A):
            raise ValueError("A must be square")
        if len(B) != n or any(len(row) != n for row in B):
            raise ValueError("B must be square with the same size as A")
        if c is None:
            c = (0,) * n
        c = tuple(mpq(x) % 1 for x in c)
        if len(c) != n:
            raise ValueError("offset c must have one entry per dimension")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return len(self.A)

    def parameters(self) -> dict[str, str]:
        return {
            "n": str(self.n),
            "A": format_int_matrix(self.A),
            "B": format_int_matrix(self.B),
            "c": format_rational_vector(self.c),
        }


@dataclass(frozen=True)
class TorusFixedPoint:
    location: tuple  # rational coordinates in [0,1)^n
    index: int  # +1 or -1


def validate(corr: TorusCorrespondence) -> tuple[int, int]:
    """Check both projections are coverings; return (deg pi_1, deg pi_2)."""
    det_a = int_det([list(r) for r in corr.A])
    det_b = int_det([list(r) for r in corr.B])
    if det_a == 0:
        raise NotACovering("det A = 0: the second projection is not a covering")
    if det_b == 0:
        raise NotACovering("det B = 0: the first projection is not a covering")
    return abs(det_b), abs(det_a)


def _difference(corr: TorusCorrespondence) -> list[list[int]]:
    return [
        [a - b for a, b in zip(ra, rb)] for ra, rb in zip(corr.A, corr.B)
    ]


def is_transversal(corr: TorusCorrespondence) -> bool:
    return int_det(_difference(corr)) != 0


def induced_map(corr: TorusCorrespondence) -> GradedMap:
    """The graded matrix of pi_1_* pi_2^*: blocks[k] = |det B| Lambda^k(B^-1 A)."""
    deg_pi1, _ = validate(corr)
    m = mat_mul(inverse(as_exact_matrix(corr.B)), as_exact_matrix(corr.A))
    factor = ExactScalar(deg_pi1)
    n = corr.n
    blocks = []
    for k in range(n + 1):
        lam = exterior_power(m, k)
        blocks.append([[factor * x for x in row] for row in lam])
    return GradedMap(tuple(comb(n, k) for k in range(n + 1)), tuple(blocks))


def lefschetz_global(corr: TorusCorrespondence) -> ExactScalar:
    """Alternating trace of the induced map, cross-checked against the
    closed form sign(det B) * det(B - A)."""
    value = alternating_trace(induced_map(corr))
    det_b = int_det([list(r) for r in corr.B])
    b_minus_a = [
        [b - a for a, b in zip(ra, rb)] for ra, rb in zip(corr.A, corr.B)
    ]
    closed = (1 if det_b > 0 else -1) * int_det(b_minus_a)
    if value != closed:
        raise AssertionError(
            f"trace side {value} disagrees with closed form {closed}"
        )
    return value


def fixed_point_index(corr: TorusCorrespondence) -> int:
    """sign det(I - B^-1 A), computed from integer determinants only."""
    det_b = int_det([list(r) for r in corr.B])
    if det_b == 0:
        raise NotACovering("det B = 0: the first projection is not a covering")
    det_bma = int_det(
        [[b - a for a, b in zip(ra, rb)] for ra, rb in zip(corr.A, corr.B)]
    )
    if det_bma == 0:
        raise NonTransversal("det(A - B) = 0: correspondence meets the diagonal non-transversally")
    return (1 if det_bma > 0 else -1) * (1 if det_b > 0 else -1)


def _congruence(corr: TorusCorrespondence) -> ToralCongruence:
    diff = _difference(corr)
    if int_det(diff) == 0:
        raise NonTransversal(
            "det(A - B) = 0: correspondence meets the diagonal non-transversally"
        )
    return ToralCongruence(diff, corr.c)


def fixed_point_count(corr: TorusCorrespondence) -> int:
    """|det(A - B)|, via the Smith normal form diagonal."""
    return _congruence(corr).count


def fixed_points(corr: TorusCorrespondence) -> list[TorusFixedPoint]:
    """Enumerate all solutions of (A - B) x = c (mod Z^n) with their index."""
    validate(corr)
    index = fixed_point_index(corr)
    return [
        TorusFixedPoint(point, index)
        for point in _congruence(corr).solutions()
    ]


def _point_satisfies(corr: TorusCorrespondence, point) -> bool:
    diff = _difference(corr)
    residual = int_mat_vec(diff, point)
    return all((r - ci) % 1 == 0 for r, ci in zip(residual, corr.c))


def verify_theorem(
    corr: TorusCorrespondence, enumeration_limit: int = ENUMERATION_LIMIT
) -> VerificationReport:
    """Global alternating trace vs. signed count of fixed points, exactly.

    The index is constant across fixed points, so the local side equals
    count * index; up to ``enumeration_limit`` points the enumeration is
    materialized and every point is re-checked against the defining
    congruence and pairwise distinctness.
    """
    validate(corr)
    global_value = lefschetz_global(corr)
    cong = _congruence(corr)
    index = fixed_point_index(corr)
    count = cong.count
    if count <= enumeration_limit:
        points = list(cong.solutions())
        if len(points) != count or len(set(points)) != count:
            raise AssertionError("fixed-point enumeration is not exact")
        for point in points:
            if not _point_satisfies(corr, point):
                raise AssertionError(f"enumerated point {point} fails the congruence")
        local_value = sum(index for _ in points)
    else:
        local_value = count * index
    return VerificationReport(
        model="torus",
        parameters=corr.parameters(),
        global_side=str(global_value),
        local_side=str(ExactScalar(local_value)),
        fixed_point_count=count,
        match=(global_value == local_value),
    )


def torus_pairing_data(n: int) -> PairingData:
    """Poincare pairing of T^n in the lexicographic monomial-form basis."""
    labels = []
    for k in range(n + 1):
        labels.append(
            tuple(
                "1" if not idx else "dx" + "dx".join(str(i + 1) for i in idx)
                for idx in increasing_tuples(n, k)
            )
        )
    pairing = {}
    zero = ExactScalar(0)
    for k in range(n + 1):
        rows = increasing_tuples(n, n - k)
        cols = increasing_tuples(n, k)
        pairing[k] = [
            [
                ExactScalar(shuffle_sign(i_idx, j_idx)) if shuffle_sign(i_idx, j_idx) else zero
                for j_idx in cols
            ]
            for i_idx in rows
        ]
    return PairingData(tuple(labels), pairing)


def integral_check(corr: TorusCorrespondence) -> VerificationReport:
    """Term-by-term diagonal-class integral against the alternating trace.

    For each basis element psi_i (with dual psi_i^*), the exact value of
    the integral over Gamma of pi_1^* psi_i ^ pi_2^* psi_i^* is obtained
    by substituting dy = B^-1 A dx, extracting the coefficient of the top
    form dx_1 ^ ... ^ dx_n, and multiplying by deg pi_1 = |det B|; the
    sum with the diagonal-class signs must equal the Lefschetz number.
    """
    deg_pi1, _ = validate(corr)
    n = corr.n
    m = mat_mul(inverse(as_exact_matrix(corr.B)), as_exact_matrix(corr.A))
    lam = [exterior_power(m, k) for k in range(n + 1)]
    pairing = torus_pairing_data(n)
    diag = diagonal_class(pairing)
    dims = pairing.dims
    starts = [0]
    for d in dims:
        starts.append(starts[-1] + d)
    duals = {k: dual_basis(pairing, k) for k in range(n + 1)}
    index_sets = {k: increasing_tuples(n, k) for k in range(n + 1)}
    positions = {
        k: {idx: pos for pos, idx in enumerate(index_sets[k])}
        for k in range(n + 1)
    }
    factor = ExactScalar(deg_pi1)

    total = ExactScalar(0)
    for term in diag.terms:
        k_dual = term.dual_degree
        k_psi = n - k_dual
        local = term.index - starts[k_psi]
        psi_idx = index_sets[k_psi][local]
        complement = tuple(sorted(set(range(n)) - set(psi_idx)))
        eps = shuffle_sign(psi_idx, complement)
        col = positions[k_dual][complement]
        d_matrix = duals[k_dual]
        lam_k = lam[k_dual]
        coeff = ExactScalar(0)
        for j in range(dims[k_dual]):
            entry = d_matrix[j][local]
            if entry:
                coeff = coeff + entry * lam_k[j][col]
        contribution = factor * coeff * ExactScalar(eps * term.sign)
        total = total + contribution

    global_value = lefschetz_global(corr)
    parameters = corr.parameters()
    parameters["check"] = "integral"
    try:
        count = fixed_point_count(corr)
    except NonTransversal:
        count = 0
    return VerificationReport(
        model="torus-integral",
        parameters=parameters,
        global_side=str(global_value),
        local_side=str(total),
        fixed_point_count=count,
        match=(global_value == total),
    )
