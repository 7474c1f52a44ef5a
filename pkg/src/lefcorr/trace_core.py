"""Graded linear algebra for cohomological trace computations.

A correspondence acts on the cohomology of a model manifold by one square
matrix per degree; the global side of every fixed-point identity is the
alternating sum of their traces.  This module holds that graded-map type
together with the supporting exact machinery: exterior powers (the action
on H^k induced by the action on H^1), Poincare-duality pairings with their
dual bases, and the signed term list of the diagonal class

    sum_i (-1)^(deg psi_i^*)  pi_1^* psi_i  ^  pi_2^* psi_i^*,

which expresses the Poincare dual of the diagonal in a Kunneth basis.

Matrix convention used throughout the package: ``m[i][j]`` is the
coefficient of the j-th basis element in the image of the i-th basis
element (rows enumerate the source basis).  Traces and determinants do not
depend on this choice, but minors and triangularity statements do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import PoincareDualityFailure
from .exact_linalg import Matrix, as_exact_matrix, det, inverse, mat_add
from .scalars import ExactScalar

__all__ = [
    "GradedMap",
    "PairingData",
    "DiagonalTerm",
    "DiagonalClass",
    "alternating_trace",
    "exterior_power",
    "dual_basis",
    "diagonal_class",
    "increasing_tuples",
    "shuffle_sign",
]

_ZERO = ExactScalar(0)
_ONE = ExactScalar(1)


@dataclass(frozen=True)
class GradedMap:
    """One square matrix per cohomology degree k = 0..n."""

    dims: tuple[int, ...]
    blocks: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.blocks) != len(self.dims):
            raise ValueError("blocks and dims must have equal length")
        for k, (d, block) in enumerate(zip(self.dims, self.blocks)):
            if len(block) != d or any(len(row) != d for row in block):
                raise ValueError(f"block in degree {k} is not {d}x{d}")

    @classmethod
    def from_blocks(cls, blocks) -> "GradedMap":
        blocks = tuple(as_exact_matrix(b) for b in blocks)
        return cls(tuple(len(b) for b in blocks), blocks)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if self.dims != other.dims:
            raise ValueError("graded maps have different dims")
        return GradedMap(
            self.dims,
            tuple(mat_add(a, b) for a, b in zip(self.blocks, other.blocks)),
        )


def alternating_trace(m: GradedMap) -> ExactScalar:
    """sum_k (-1)^k tr(blocks[k])."""
    total = _ZERO
    for k, block in enumerate(m.blocks):
        t = sum((block[i][i] for i in range(len(block))), _ZERO)
        total = total - t if k % 2 else total + t
    return total


def increasing_tuples(n: int, k: int) -> list[tuple[int, ...]]:
    """Strictly increasing k-tuples from {0..n-1} in lexicographic order."""
    return list(combinations(range(n), k))


def exterior_power(m: Matrix, k: int) -> Matrix:
    """The induced matrix on the k-th exterior power.

    Basis: increasing multi-indices in lexicographic order.  Entry (I, J)
    is the minor of ``m`` with rows I and columns J, so Lambda^0 = [1],
    Lambda^1 = m, and tr Lambda^k(m) is the k-th elementary symmetric
    function of the eigenvalues.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("exterior_power requires a square matrix")
    if not 0 <= k <= n:
        raise ValueError(f"exterior power {k} out of range for size {n}")
    if k == 0:
        return [[_ONE]]
    m = as_exact_matrix(m)
    if k == 1:
        return [list(row) for row in m]
    index_sets = increasing_tuples(n, k)
    out = []
    for rows in index_sets:
        out_row = []
        for cols in index_sets:
            out_row.append(det([[m[i][j] for j in cols] for i in rows]))
        out.append(out_row)
    return out


@dataclass(frozen=True)
class PairingData:
    """Finite-dimensional shadow of Poincare duality on an n-manifold.

    ``basis_labels[k]`` names the chosen basis of H^k.  ``pairing[k]`` is
    the matrix P with P[i][j] = integral over M of psi_i ^ phi_j, where
    psi runs over the degree n-k basis and phi over the degree k basis.
    """

    basis_labels: tuple[tuple[str, ...], ...]
    pairing: dict[int, Matrix] = field(compare=False)

    @property
    def top_degree(self) -> int:
        return len(self.basis_labels) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(labels) for labels in self.basis_labels)

    def __post_init__(self):
        n = self.top_degree
        dims = self.dims
        for k, p in self.pairing.items():
            if len(p) != dims[n - k] or any(len(row) != dims[k] for row in p):
                raise ValueError(
                    f"pairing matrix for degree {k} has wrong shape"
                )


def dual_basis(p: PairingData, degree: int) -> Matrix:
    """Change-of-basis matrix D making the (n-k, k) pairing the identity.

    The dual basis element psi_i^* = sum_j D[j][i] phi_j satisfies
    <psi_i, psi_l^*> = delta_{il}; concretely D is the inverse of the
    pairing matrix.
    """
    matrix = p.pairing.get(degree)
    if matrix is None:
        raise KeyError(f"no pairing stored for degree {degree}")
    try:
        return inverse(matrix)
    except ZeroDivisionError as exc:
        raise PoincareDualityFailure(
            f"pairing matrix in degree {degree} is singular"
        ) from exc


@dataclass(frozen=True)
class DiagonalTerm:
    dual_degree: int  # degree of psi_i^*
    index: int  # position of psi_i in the full H^* basis enumeration
    sign: int  # (-1) ** dual_degree


@dataclass(frozen=True)
class DiagonalClass:
    terms: tuple[DiagonalTerm, ...]


def diagonal_class(p: PairingData) -> DiagonalClass:
    """Signed term list of the diagonal class, one term per basis element.

    Basis elements are enumerated degree by degree (each degree in its
    stored order); the term for psi_i in degree k carries the sign
    (-1)^(n-k) of its dual partner's degree.
    """
    n = p.top_degree
    for k in range(n + 1):
        dual_basis(p, k)  # every degree must admit a dual basis
    terms = []
    index = 0
    for k, labels in enumerate(p.basis_labels):
        for _ in labels:
            dual_degree = n - k
            terms.append(
                DiagonalTerm(dual_degree, index, -1 if dual_degree % 2 else 1)
            )
            index += 1
    return DiagonalClass(tuple(terms))


def shuffle_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Sign of dx_left ^ dx_right relative to the ordered top form.

    Both tuples are strictly increasing; returns 0 unless they partition
    {0..n-1}, else the parity of the shuffle merging them.
    """
    if set(left) & set(right):
        return 0
    inversions = 0
    for a in left:
        for b in right:
            if a > b:
                inversions += 1
    return -1 if inversions % 2 else 1
