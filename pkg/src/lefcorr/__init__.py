"""Exact two-sided verification of Lefschetz-type fixed-point identities
for correspondences on model manifolds.

Three model families are covered, each with a global (cohomological trace)
side and an independently computed local (fixed point) side:

* smooth correspondences ``A x = B y + c`` on the n-torus;
* holomorphic correspondences ``a z = b w + c`` on a complex torus,
  including the division ("Hecke-like") family;
* Moebius self-maps of CP^1 with the canonical lifting on O(d), and
  finite unions of such graphs.

All comparisons are exact (rationals / Gaussian rationals) except the
explicitly marked floating-eigenvalue mode on CP^1.
"""

from .complex_torus import (
    ComplexTorusCorrespondence,
    HoloFixedPoint,
    LatticeSpec,
    hecke_like,
)
from .cp1 import BundleFixedPoint, BundleSelfMap, GraphUnionCorrespondence
from .errors import (
    DegenerateEigenvalues,
    IrrationalEigenvaluesWarning,
    LefcorrError,
    MultiplierNotInRing,
    NonTransversal,
    NotACovering,
    PoincareDualityFailure,
)
from .reports import VerificationReport, emit_report
from .scalars import ExactScalar
from .sweep import SweepConfig, SweepSummary, run_sweep
from .torus import TorusCorrespondence, TorusFixedPoint
from .trace_core import (
    DiagonalClass,
    GradedMap,
    PairingData,
    alternating_trace,
    diagonal_class,
    dual_basis,
    exterior_power,
)

__version__ = "0.1.0"

__all__ = [
    "ExactScalar",
    "GradedMap",
    "PairingData",
    "DiagonalClass",
    "alternating_trace",
    "exterior_power",
    "dual_basis",
    "diagonal_class",
    "TorusCorrespondence",
    "TorusFixedPoint",
    "ComplexTorusCorrespondence",
    "HoloFixedPoint",
    "LatticeSpec",
    "hecke_like",
    "BundleSelfMap",
    "BundleFixedPoint",
    "GraphUnionCorrespondence",
    "VerificationReport",
    "emit_report",
    "SweepConfig",
    "SweepSummary",
    "run_sweep",
    "LefcorrError",
    "NotACovering",
    "NonTransversal",
    "PoincareDualityFailure",
    "MultiplierNotInRing",
    "DegenerateEigenvalues",
    "IrrationalEigenvaluesWarning",
]
