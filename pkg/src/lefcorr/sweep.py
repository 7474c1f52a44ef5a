"""Randomized counterexample sweeps with reproducible substreams.

RNG contract (fixed so that any implementation can replay a sweep): trial
``t`` of a sweep with seed ``s`` draws from a Philox-4x64-10 counter-based
generator keyed with the two 64-bit words ``(s, t)`` and counter starting
at zero, consumed through numpy's ``Generator`` (bounded integers via
``Generator.integers``).  Draws happen in the documented order below, so
identical (seed, config) produce identical parameter sequences and
byte-identical JSON Lines.

Draw order per trial:

* torus: n; the n*n entries of A row-major; the n*n entries of B
  row-major; then per coordinate of c a denominator q in 1..denom_bound
  and a numerator in 0..q-1.
* ctorus (gaussian): re(a), im(a), re(b), im(b) in [-s, s] with
  s = isqrt(norm_bound); then the offset coordinates as for the torus c.
  In generic mode only a and b are drawn (one integer each in [-s, s]).
* cp1 (exact family): d in 0..d_max; diagonal entries mu1, mu2 and the
  top-right entry of an upper-triangular g, all in [-entry_bound,
  entry_bound].
* cp1 (float family): d; then 8 numerators in [-64, 64] giving the four
  matrix entries (re then im, row-major) with denominator 64.  Eigenvalues
  of such g are generically irrational, which exercises the
  floating-point verification path.

Degenerate draws (a vanishing covering degree, a non-transversal
correspondence, a repeated eigenvalue, or an eigenvalue gap below 0.1 in
the float family) are skipped and counted; they are not redrawn, so the
trial budget is consumed.  Emitted lines carry the cumulative skip count.
"""

from __future__ import annotations


from dataclasses import dataclass
from math import isqrt

import numpy as np
from gmpy2 import mpq

from . import complex_torus, cp1, torus
from .complex_torus import ComplexTorusCorrespondence, LatticeSpec
from .cp1 import BundleSelfMap, GraphUnionCorrespondence
from .errors import DegenerateEigenvalues, NonTransversal, NotACovering
from .reports import VerificationReport, json_line
from .scalars import ExactScalar
from .torus import TorusCorrespondence

__all__ = [
    "SweepConfig",
    "SweepSummary",
    "trial_rng",
    "draw_torus",
    "draw_ctorus",
    "draw_cp1",
    "draw_cp1_union",
    "run_sweep",
    "integral_audit",
    "gaussian_multipliers",
    "generic_multipliers",
    "run_exhaustive_ctorus",
]

MODELS = ("torus", "ctorus", "cp1")
SKIP_ERRORS = (NotACovering, NonTransversal, DegenerateEigenvalues)
FLOAT_EIGEN_GAP = 0.1
FLOAT_DENOMINATOR = 64


@dataclass
class SweepConfig:
    model: str
    trials: int
    seed: int = 0
    dim_max: int = 4
    entry_bound: int = 9
    denom_bound: int = 12
    norm_bound: int = 25
    d_max: int = 12
    ctorus_mode: str = "gaussian"
    tau: ExactScalar = ExactScalar(0, 1)
    cp1_float: bool = False
    exhaustive: bool = False
    offsets_per_pair: int = 1
    output: str | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown sweep model {self.model!r}; pick from {MODELS}")
        if not self.exhaustive and self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not 1 <= self.dim_max <= 4:
            raise ValueError("dim_max must be between 1 and 4")
        for name in ("entry_bound", "denom_bound", "norm_bound", "d_max", "offsets_per_pair"):
            if getattr(self, name) < 1 and not (name == "d_max" and self.d_max == 0):
                raise ValueError(f"{name} must be positive")
        if self.ctorus_mode not in ("generic", "gaussian"):
            raise ValueError("ctorus mode must be generic or gaussian")
        if self.exhaustive and self.model != "ctorus":
            raise ValueError("exhaustive enumeration is only defined for ctorus")


@dataclass
class SweepSummary:
    trials: int = 0
    skipped: int = 0
    matches: int = 0
    mismatches: int = 0

    def text(self) -> str:
        return (
            f"trials={self.trials} skipped={self.skipped} "
            f"matches={self.matches} mismatches={self.mismatches}"
        )


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent substream for one trial: Philox keyed by (seed, trial)."""
    key = np.array([seed, trial], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _draw_offset_coord(rng, denom_bound: int):
    q = int(rng.integers(1, denom_bound + 1))
    p = int(rng.integers(0, q))
    return mpq(p, q)


def draw_torus(rng, cfg: SweepConfig) -> TorusCorrespondence:
    n = int(rng.integers(1, cfg.dim_max + 1))
    e = cfg.entry_bound
    a = [[int(rng.integers(-e, e + 1)) for _ in range(n)] for _ in range(n)]
    b = [[int(rng.integers(-e, e + 1)) for _ in range(n)] for _ in range(n)]
    c = [_draw_offset_coord(rng, cfg.denom_bound) for _ in range(n)]
    return TorusCorrespondence(a, b, c)


def _lattice_for(cfg: SweepConfig) -> LatticeSpec:
    if cfg.ctorus_mode == "gaussian":
        return LatticeSpec.gaussian()
    return LatticeSpec.generic(cfg.tau)


def draw_ctorus(rng, cfg: SweepConfig) -> ComplexTorusCorrespondence:
    s = isqrt(cfg.norm_bound)
    if cfg.ctorus_mode == "gaussian":
        a = ExactScalar(int(rng.integers(-s, s + 1)), int(rng.integers(-s, s + 1)))
        b = ExactScalar(int(rng.integers(-s, s + 1)), int(rng.integers(-s, s + 1)))
    else:
        a = ExactScalar(int(rng.integers(-s, s + 1)))
        b = ExactScalar(int(rng.integers(-s, s + 1)))
    c = (_draw_offset_coord(rng, cfg.denom_bound), _draw_offset_coord(rng, cfg.denom_bound))
    return ComplexTorusCorrespondence(_lattice_for(cfg), a, b, c)


def draw_cp1(rng, cfg: SweepConfig) -> BundleSelfMap:
    d = int(rng.integers(0, cfg.d_max + 1))
    if cfg.cp1_float:
        nums = [int(rng.integers(-FLOAT_DENOMINATOR, FLOAT_DENOMINATOR + 1)) for _ in range(8)]
        den = FLOAT_DENOMINATOR
        entries = [
            ExactScalar(mpq(nums[2 * i], den), mpq(nums[2 * i + 1], den))
            for i in range(4)
        ]
        g = [[entries[0], entries[1]], [entries[2], entries[3]]]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if not det:
            raise NotACovering("drawn g is singular")
        tr = entries[0] + entries[3]
        disc = tr * tr - ExactScalar(4) * det
        if abs(complex(disc)) ** 0.5 < FLOAT_EIGEN_GAP:
            raise DegenerateEigenvalues("eigenvalue gap below float margin")
        return BundleSelfMap(g, d)
    e = cfg.entry_bound
    mu1 = int(rng.integers(-e, e + 1))
    mu2 = int(rng.integers(-e, e + 1))
    top = int(rng.integers(-e, e + 1))
    if mu1 == 0 or mu2 == 0:
        raise NotACovering("drawn g is singular")
    if mu1 == mu2:
        raise DegenerateEigenvalues("drawn g has equal diagonal entries")
    return BundleSelfMap([[mu1, top], [0, mu2]], d)


def draw_cp1_union(rng, cfg: SweepConfig, max_branches: int = 5) -> GraphUnionCorrespondence:
    """Union of up to ``max_branches`` exact triangular branches sharing d.

    Draw order: branch count, d, then per branch (mu1, mu2, top)."""
    count = int(rng.integers(1, max_branches + 1))
    d = int(rng.integers(0, cfg.d_max + 1))
    e = cfg.entry_bound
    branches = []
    for _ in range(count):
        mu1 = int(rng.integers(-e, e + 1))
        mu2 = int(rng.integers(-e, e + 1))
        top = int(rng.integers(-e, e + 1))
        if mu1 == 0 or mu2 == 0:
            raise NotACovering("drawn branch is singular")
        if mu1 == mu2:
            raise DegenerateEigenvalues("drawn branch has equal diagonal entries")
        branches.append(BundleSelfMap([[mu1, top], [0, mu2]], d))
    return GraphUnionCorrespondence(branches)


_DRAWERS = {
    "torus": draw_torus,
    "ctorus": draw_ctorus,
    "cp1": draw_cp1,
}

_VERIFIERS = {
    "torus": torus.verify_theorem,
    "ctorus": complex_torus.verify_conjecture1,
    "cp1": cp1.verify_ab_4_12,
}


def _tally(summary: SweepSummary, report: VerificationReport) -> None:
    if report.match:
        summary.matches += 1
    else:
        summary.mismatches += 1


def run_sweep(cfg: SweepConfig, sink=None) -> SweepSummary:
    """Run the sweep, streaming one JSON line per verified trial to sink.

    ``sink`` is a callable receiving bytes; when None and cfg.output is
    set, lines go to that file.  Returns the summary; a mismatch report
    always carries the full parameters needed to re-run it.
    """
    if cfg.exhaustive:
        return run_exhaustive_ctorus(cfg, sink)
    close_me = None
    if sink is None and cfg.output:
        close_me = open(cfg.output, "wb")
        sink = close_me.write
    draw = _DRAWERS[cfg.model]
    verify = _VERIFIERS[cfg.model]
    summary = SweepSummary(trials=cfg.trials)
    try:
        for trial in range(cfg.trials):
            rng = trial_rng(cfg.seed, trial)
            try:
                instance = draw(rng, cfg)
                report = verify(instance)
            except SKIP_ERRORS:
                summary.skipped += 1
                continue
            _tally(summary, report)
            if sink is not None:
                report.seed = cfg.seed
                report.trial = trial
                report.skipped_degenerate = summary.skipped
                sink(json_line(report))
    finally:
        if close_me is not None:
            close_me.close()
    return summary


def gaussian_multipliers(norm_bound: int) -> list[ExactScalar]:
    """All nonzero Gaussian integers with norm <= norm_bound, in a fixed
    lexicographic (re, im) order."""
    s = isqrt(norm_bound)
    out = []
    for p in range(-s, s + 1):
        for q in range(-s, s + 1):
            if (p or q) and p * p + q * q <= norm_bound:
                out.append(ExactScalar(p, q))
    return out


def generic_multipliers(norm_bound: int) -> list[ExactScalar]:
    """Nonzero rational integers with norm m^2 <= norm_bound, ascending."""
    s = isqrt(norm_bound)
    return [ExactScalar(m) for m in range(-s, s + 1) if m]


def run_exhaustive_ctorus(cfg: SweepConfig, sink=None) -> SweepSummary:
    """Verify every ordered multiplier pair (a, b) with a != b from the
    norm-bounded family, with ``offsets_per_pair`` random offsets each.

    Pairs are enumerated in the fixed multiplier-list order; pair number p
    draws all of its offset coordinates (two per offset, as for the torus
    c) from the substream keyed (seed, p).  Emitted trials are numbered
    consecutively over (pair, offset).
    """
    close_me = None
    if sink is None and cfg.output:
        close_me = open(cfg.output, "wb")
        sink = close_me.write
    if cfg.ctorus_mode == "gaussian":
        multipliers = gaussian_multipliers(cfg.norm_bound)
    else:
        multipliers = generic_multipliers(cfg.norm_bound)
    lattice = _lattice_for(cfg)
    summary = SweepSummary()
    trial = 0
    pair_index = 0
    try:
        for a in multipliers:
            for b in multipliers:
                if a == b:
                    continue
                rng = trial_rng(cfg.seed, pair_index)
                pair_index += 1
                for _ in range(cfg.offsets_per_pair):
                    c = (
                        _draw_offset_coord(rng, cfg.denom_bound),
                        _draw_offset_coord(rng, cfg.denom_bound),
                    )
                    corr = ComplexTorusCorrespondence(lattice, a, b, c)
                    report = complex_torus.verify_conjecture1(corr)
                    _tally(summary, report)
                    if sink is not None:
                        report.seed = cfg.seed
                        report.trial = trial
                        report.skipped_degenerate = summary.skipped
                        sink(json_line(report))
                    summary.trials += 1
                    trial += 1
    finally:
        if close_me is not None:
            close_me.close()
    return summary


@dataclass
class AuditSummary:
    trials: int = 0
    skipped: int = 0
    exact_equal: int = 0
    mismatches: int = 0

    def text(self) -> str:
        return (
            f"trials={self.trials} skipped={self.skipped} "
            f"exact_equal={self.exact_equal} mismatches={self.mismatches}"
        )


def integral_audit(cfg: SweepConfig, sink=None) -> AuditSummary:
    """Diagonal-class integral audit over torus draws.

    Non-covering draws are skipped; non-transversal ones are kept (the
    integral identity does not need transversality)."""
    if cfg.model != "torus":
        raise ValueError("integral audit is defined for the torus model only")
    close_me = None
    if sink is None and cfg.output:
        close_me = open(cfg.output, "wb")
        sink = close_me.write
    summary = AuditSummary(trials=cfg.trials)
    try:
        for trial in range(cfg.trials):
            rng = trial_rng(cfg.seed, trial)
            try:
                corr = draw_torus(rng, cfg)
                report = torus.integral_check(corr)
            except NotACovering:
                summary.skipped += 1
                continue
            if report.match:
                summary.exact_equal += 1
            else:
                summary.mismatches += 1
            if sink is not None:
                report.seed = cfg.seed
                report.trial = trial
                report.skipped_degenerate = summary.skipped
                sink(json_line(report))
    finally:
        if close_me is not None:
            close_me.close()
    return summary
