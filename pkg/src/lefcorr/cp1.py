"""Self-maps of CP^1 with the canonical lifting on the line bundle O(d),
and unions of such graphs (the decomposable correspondences).

Conventions, fixed once and checked by the two-sided verification below:

* the point map is [v] -> [g v] for an invertible 2x2 matrix g;
* sections of O(d) are the binary forms P(z0, z1) of degree d, and the
  lifting acts by precomposition, P -> P o g;
* in the diagonal model g = diag(mu1, mu2) the point map is z -> (mu2/mu1) z
  on the affine chart, with fixed points 0 and infinity, differential
  (other eigenvalue)/(own eigenvalue), and local lifting weight mu_i^d at
  the mu_i eigendirection (from the O(d) transition functions
  s1(w) = w^d s0(1/w)).

For d >= 0 the bundle has H^1(CP^1, O(d)) = 0, so the alternating sum of
traces degenerates to the H^0 term.  The sum is taken from k = 0; note
that some displayed versions of the bundle Lefschetz number start the sum
at k = 1, which would drop the H^0 term and break every identity checked
here — the k = 0 convention is the one under which the fixed-point
formula holds.  Negative d (where H^1 is nonzero by Serre duality) is
rejected rather than silently mishandled.

The global side is computed by explicit polynomial substitution and
binomial expansion and never touches eigenvalues; the local side uses
only eigenvalues and eigendirections.  Exact arithmetic is used whenever
the eigenvalues lie in Q or Q(i); otherwise the local side falls back to
floating complex arithmetic with an explicit comparison tolerance.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from math import comb

from .errors import DegenerateEigenvalues, IrrationalEigenvaluesWarning
from .exact_linalg import Matrix, as_exact_matrix, mat_add
from .reports import VerificationReport, format_float_scalar
from .scalars import ExactScalar, exact_sqrt
from .textio import format_scalar_matrix
from .trace_core import GradedMap, alternating_trace

__all__ = [
    "BundleSelfMap",
    "BundleFixedPoint",
    "GraphUnionCorrespondence",
    "cohomology_action",
    "lefschetz_global",
    "fixed_point_data",
    "local_fixed_point_sum",
    "verify_ab_4_12",
    "verify_conjecture2_union",
    "FLOAT_TOLERANCE",
]

FLOAT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BundleSelfMap:
    g: tuple  # 2x2 invertible matrix over Q(i)
    d: int  # bundle degree, >= 0

    def __init__(self, g, d):
        g = as_exact_matrix(g)
        if len(g) != 2 or any(len(row) != 2 for row in g):
            raise ValueError("g must be a 2x2 matrix")
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] == 0:
            raise ValueError("g must be invertible")
        d = int(d)
        if d < 0:
            raise ValueError(
                "bundle degree d < 0 rejected: H^1(CP^1, O(d)) is nonzero "
                "there and the degenerate-sum convention does not apply"
            )
        object.__setattr__(self, "g", tuple(tuple(row) for row in g))
        object.__setattr__(self, "d", d)

    def parameters(self) -> dict[str, str]:
        return {"g": format_scalar_matrix(self.g), "d": str(self.d)}


@dataclass(frozen=True)
class BundleFixedPoint:
    eigenvalue: object  # ExactScalar, or complex in floating mode
    other_eigenvalue: object
    location: tuple  # projective point, normalized (1, w) or (0, 1)
    differential: object  # other/own
    phi_weight: object  # own ** d
    exact: bool


@dataclass(frozen=True)
class GraphUnionCorrespondence:
    branches: tuple[BundleSelfMap, ...]

    def __init__(self, branches):
        branches = tuple(branches)
        if not branches:
            raise ValueError("a union needs at least one branch")
        if len({b.d for b in branches}) != 1:
            raise ValueError("all branches must share the same bundle degree")
        object.__setattr__(self, "branches", branches)

    @property
    def d(self) -> int:
        return self.branches[0].d

    def parameters(self) -> dict[str, str]:
        return {
            "branches": "|".join(format_scalar_matrix(b.g) for b in self.branches),
            "d": str(self.d),
        }


def _binomial_expansion(alpha, beta, m: int) -> list:
    """Coefficients of (alpha z0 + beta z1)^m over z1-degree 0..m."""
    coeffs = [None] * (m + 1)
    # running product: C(m, j) alpha^(m-j) beta^j
    alpha_pows = [ExactScalar(1)]
    for _ in range(m):
        alpha_pows.append(alpha_pows[-1] * alpha)
    term = ExactScalar(1)
    for j in range(m + 1):
        coeffs[j] = ExactScalar(comb(m, j)) * alpha_pows[m - j] * term
        term = term * beta
    return coeffs


def cohomology_action(m: BundleSelfMap) -> Matrix:
    """Matrix of P -> P o g on the monomial basis z0^(d-k) z1^k.

    Row k holds the expansion of (g00 z0 + g01 z1)^(d-k) (g10 z0 + g11 z1)^k.
    Pure polynomial algebra; eigenvalues are never used.
    """
    (g00, g01), (g10, g11) = m.g
    d = m.d
    zero = ExactScalar(0)
    rows = []
    for k in range(d + 1):
        first = _binomial_expansion(g00, g01, d - k)
        second = _binomial_expansion(g10, g11, k)
        row = [zero] * (d + 1)
        for s, cs in enumerate(second):
            if not cs:
                continue
            for t, ct in enumerate(first):
                if ct:
                    row[s + t] = row[s + t] + cs * ct
        rows.append(row)
    return rows


def graded_action(m: BundleSelfMap) -> GradedMap:
    """The full graded action: H^0 is the (d+1)-dimensional space of forms,
    H^1(CP^1, O(d)) = 0 for d >= 0 appears as an empty block."""
    return GradedMap((m.d + 1, 0), (cohomology_action(m), []))


def lefschetz_global(m: BundleSelfMap) -> ExactScalar:
    """Alternating trace over coherent cohomology; equals the H^0 trace."""
    return alternating_trace(graded_action(m))


def _eigenvalues(m: BundleSelfMap):
    """(mu, nu, exact) — exact scalars when the discriminant is a square in
    Q(i), else complex floats (with a warning)."""
    (g00, g01), (g10, g11) = m.g
    tr = g00 + g11
    disc = tr * tr - ExactScalar(4) * (g00 * g11 - g01 * g10)
    if not disc:
        raise DegenerateEigenvalues(
            "g has a repeated eigenvalue; the graph is tangent to the diagonal"
        )
    root = exact_sqrt(disc)
    if root is not None:
        half = ExactScalar(1) / ExactScalar(2)
        return (tr + root) * half, (tr - root) * half, True
    warnings.warn(
        "eigenvalues are irrational; falling back to floating-point",
        IrrationalEigenvaluesWarning,
        stacklevel=3,
    )
    croot = cmath.sqrt(complex(disc))
    ctr = complex(tr)
    return (ctr + croot) / 2, (ctr - croot) / 2, False


def _eigendirection(m: BundleSelfMap, mu, exact: bool) -> tuple:
    (g00, g01), (g10, g11) = m.g
    if exact:
        if g01:
            v = (g01, mu - g00)
        elif g10:
            v = (mu - g11, g10)
        else:
            return (ExactScalar(1), ExactScalar(0)) if mu == g00 else (
                ExactScalar(0),
                ExactScalar(1),
            )
        if v[0]:
            return (ExactScalar(1), v[1] / v[0])
        return (ExactScalar(0), ExactScalar(1))
    c00, c01, c10, c11 = (complex(x) for x in (g00, g01, g10, g11))
    if c01 != 0:
        v = (c01, mu - c00)
    elif c10 != 0:
        v = (mu - c11, c10)
    else:
        return (1.0, 0.0) if abs(mu - c00) <= abs(mu - c11) else (0.0, 1.0)
    if abs(v[0]) > 1e-14:
        return (1.0, v[1] / v[0])
    return (0.0, 1.0)


def fixed_point_data(m: BundleSelfMap) -> list[BundleFixedPoint]:
    """The two fixed points of the point map with their local data.

    Each eigendirection of g is a fixed point; there the differential of
    the point map is (other eigenvalue)/(own eigenvalue) and the lifting
    acts on the fiber by (own eigenvalue)^d.
    """
    mu, nu, exact = _eigenvalues(m)
    points = []
    for own, other in ((mu, nu), (nu, mu)):
        location = _eigendirection(m, own, exact)
        differential = other / own
        points.append(
            BundleFixedPoint(own, other, location, differential, own**m.d, exact)
        )
    return points


def local_fixed_point_sum(m: BundleSelfMap):
    """sum over fixed points of phi_p / (1 - f'(p)); exactness follows the
    eigenvalue computation."""
    points = fixed_point_data(m)
    if points[0].exact:
        total = ExactScalar(0)
        one = ExactScalar(1)
        for p in points:
            total = total + p.phi_weight / (one - p.differential)
        return total, True
    total = 0j
    for p in points:
        total = total + p.phi_weight / (1 - p.differential)
    return total, False


def verify_ab_4_12(m: BundleSelfMap) -> VerificationReport:
    """Matrix-trace side against the eigenvalue side of the bundle
    fixed-point formula; exact when the eigenvalues are exact, otherwise
    compared within FLOAT_TOLERANCE."""
    global_value = lefschetz_global(m)
    local_value, exact = local_fixed_point_sum(m)
    if exact:
        return VerificationReport(
            model="cp1",
            parameters=m.parameters(),
            global_side=str(global_value),
            local_side=str(local_value),
            fixed_point_count=2,
            match=(global_value == local_value),
        )
    delta = abs(complex(global_value) - local_value)
    return VerificationReport(
        model="cp1",
        parameters=m.parameters(),
        global_side=format_float_scalar(complex(global_value)),
        local_side=format_float_scalar(local_value),
        fixed_point_count=2,
        match=(delta <= FLOAT_TOLERANCE),
        tolerance=repr(FLOAT_TOLERANCE),
    )


def verify_conjecture2_union(u: GraphUnionCorrespondence) -> VerificationReport:
    """Decomposable-correspondence check: the union acts by the sum of the
    branch actions, so the global side is the trace of the matrix sum and
    the local side sums each branch's fixed-point contributions
    (coincident fixed points simply add).  A mismatch would be a
    counterexample and is preserved in the report."""
    total_action = None
    for branch in u.branches:
        action = cohomology_action(branch)
        total_action = action if total_action is None else mat_add(total_action, action)
    graded = GradedMap((u.d + 1, 0), (total_action, []))
    global_value = alternating_trace(graded)

    locals_and_modes = [local_fixed_point_sum(b) for b in u.branches]
    all_exact = all(mode for _, mode in locals_and_modes)
    count = 2 * len(u.branches)
    if all_exact:
        local_value = ExactScalar(0)
        for value, _ in locals_and_modes:
            local_value = local_value + value
        return VerificationReport(
            model="cp1-union",
            parameters=u.parameters(),
            global_side=str(global_value),
            local_side=str(local_value),
            fixed_point_count=count,
            match=(global_value == local_value),
        )
    local_value = 0j
    for value, _ in locals_and_modes:
        local_value = local_value + complex(value)
    delta = abs(complex(global_value) - local_value)
    return VerificationReport(
        model="cp1-union",
        parameters=u.parameters(),
        global_side=format_float_scalar(complex(global_value)),
        local_side=format_float_scalar(local_value),
        fixed_point_count=count,
        match=(delta <= FLOAT_TOLERANCE),
        tolerance=repr(FLOAT_TOLERANCE),
    )
