"""Command-line front end.

Subcommands: ``torus``, ``ctorus``, ``cp1`` run one verification;
``sweep <model>`` runs a randomized (or, for ctorus, exhaustive) sweep;
``audit-integral`` runs the diagonal-class integral audit over torus
draws or on one explicit correspondence.

Exit codes: 0 when every verification matched, 2 on any mismatch, 1 on
usage or validation errors.  The default seed comes from the LEFCORR_SEED
environment variable (0 when unset).
"""

from __future__ import annotations

import argparse
import os
import sys

from .complex_torus import ComplexTorusCorrespondence, LatticeSpec, verify_conjecture1
from .cp1 import BundleSelfMap, GraphUnionCorrespondence, verify_ab_4_12, verify_conjecture2_union
from .errors import LefcorrError
from .reports import emit_report
from .scalars import ExactScalar
from .sweep import SweepConfig, integral_audit, run_sweep
from .textio import (
    parse_int_matrix,
    parse_multiplier,
    parse_offset,
    parse_rational_vector,
    parse_scalar_matrix,
)
from .torus import TorusCorrespondence, integral_check, verify_theorem

USAGE_EXIT = 1
MISMATCH_EXIT = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the report contract reserves 2 for
    # mismatches, so remap usage problems to exit code 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("LEFCORR_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"LEFCORR_SEED is not an integer: {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lefcorr",
        description="Exact two-sided verification of fixed-point identities "
        "for correspondences on tori and CP^1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_report_flags(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", help="also write the report to this file")

    p_torus = sub.add_parser("torus", help="verify one torus correspondence")
    p_torus.add_argument("--A", required=True, help='integer matrix, e.g. "2,0;0,2"')
    p_torus.add_argument("--B", required=True, help="integer matrix")
    p_torus.add_argument("--c", help='rational offset vector, e.g. "1/2,0"')
    add_report_flags(p_torus)

    p_ctorus = sub.add_parser("ctorus", help="verify one complex-torus correspondence")
    p_ctorus.add_argument("--mode", choices=("generic", "gaussian"), default="gaussian")
    p_ctorus.add_argument("--a", required=True, help='multiplier, "m" or "m+ni"')
    p_ctorus.add_argument("--b", required=True, help="multiplier")
    p_ctorus.add_argument("--c", default="0", help='offset, rational or "x+y*i"')
    p_ctorus.add_argument("--tau", default="0+1*i", help='lattice parameter "x+y*i" (generic mode)')
    add_report_flags(p_ctorus)

    p_cp1 = sub.add_parser("cp1", help="verify a CP^1 bundle self-map or union")
    p_cp1.add_argument("--g", help='2x2 matrix, entries rational or "x+y*i"')
    p_cp1.add_argument(
        "--branch",
        action="append",
        default=[],
        help="2x2 matrix of one union branch (repeatable)",
    )
    p_cp1.add_argument("--d", type=int, required=True, help="bundle degree, >= 0")
    add_report_flags(p_cp1)

    p_sweep = sub.add_parser("sweep", help="randomized counterexample sweep")
    p_sweep.add_argument("model", choices=("torus", "ctorus", "cp1"))
    p_sweep.add_argument("--trials", type=int, default=1000)
    p_sweep.add_argument("--seed", type=int, default=None)
    p_sweep.add_argument("--dim-max", type=int, default=4)
    p_sweep.add_argument("--entry-bound", type=int, default=9)
    p_sweep.add_argument("--denom-bound", type=int, default=12)
    p_sweep.add_argument("--norm-bound", type=int, default=25)
    p_sweep.add_argument("--d-max", type=int, default=12)
    p_sweep.add_argument("--mode", choices=("generic", "gaussian"), default="gaussian")
    p_sweep.add_argument("--tau", default="0+1*i")
    p_sweep.add_argument("--float", action="store_true", dest="cp1_float",
                         help="cp1 only: draw the floating-eigenvalue family")
    p_sweep.add_argument("--exhaustive", action="store_true",
                         help="ctorus only: enumerate all multiplier pairs")
    p_sweep.add_argument("--offsets-per-pair", type=int, default=1)
    p_sweep.add_argument("--output", help="JSON Lines file (default: stdout)")

    p_audit = sub.add_parser("audit-integral", help="diagonal-class integral audit")
    p_audit.add_argument("--A", help="integer matrix: audit exactly this correspondence")
    p_audit.add_argument("--B", help="integer matrix")
    p_audit.add_argument("--c", help="rational offset vector")
    p_audit.add_argument("--trials", type=int, default=1000)
    p_audit.add_argument("--seed", type=int, default=None)
    p_audit.add_argument("--dim-max", type=int, default=3)
    p_audit.add_argument("--entry-bound", type=int, default=9)
    p_audit.add_argument("--denom-bound", type=int, default=12)
    add_report_flags(p_audit)

    return parser


def _emit_single(report, args) -> int:
    payload = emit_report(report, args.format)
    sys.stdout.buffer.write(payload)
    if not payload.endswith(b"\n"):
        sys.stdout.buffer.write(b"\n")
    sys.stdout.buffer.flush()
    if args.output:
        with open(args.output, "wb") as handle:
            handle.write(payload)
    return 0 if report.match else MISMATCH_EXIT


def _parse_torus(args) -> TorusCorrespondence:
    a = parse_int_matrix(args.A)
    b = parse_int_matrix(args.B)
    c = parse_rational_vector(args.c, len(a)) if args.c else None
    return TorusCorrespondence(a, b, c)


def _run_torus(args) -> int:
    return _emit_single(verify_theorem(_parse_torus(args)), args)


def _run_ctorus(args) -> int:
    if args.mode == "gaussian":
        lattice = LatticeSpec.gaussian()
    else:
        lattice = LatticeSpec.generic(ExactScalar.parse(args.tau))
    corr = ComplexTorusCorrespondence(
        lattice,
        parse_multiplier(args.a),
        parse_multiplier(args.b),
        parse_offset(args.c),
    )
    return _emit_single(verify_conjecture1(corr), args)


def _run_cp1(args) -> int:
    if args.branch:
        if args.g:
            raise ValueError("give either --g or --branch, not both")
        union = GraphUnionCorrespondence(
            [BundleSelfMap(parse_scalar_matrix(text), args.d) for text in args.branch]
        )
        if len(union.branches) == 1:
            return _emit_single(verify_ab_4_12(union.branches[0]), args)
        return _emit_single(verify_conjecture2_union(union), args)
    if not args.g:
        raise ValueError("cp1 needs --g or at least one --branch")
    return _emit_single(verify_ab_4_12(BundleSelfMap(parse_scalar_matrix(args.g), args.d)), args)


def _run_sweep(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = SweepConfig(
        model=args.model,
        trials=args.trials,
        seed=seed,
        dim_max=args.dim_max,
        entry_bound=args.entry_bound,
        denom_bound=args.denom_bound,
        norm_bound=args.norm_bound,
        d_max=args.d_max,
        ctorus_mode=args.mode,
        tau=ExactScalar.parse(args.tau),
        cp1_float=args.cp1_float,
        exhaustive=args.exhaustive,
        offsets_per_pair=args.offsets_per_pair,
        output=args.output,
    )
    if cfg.output:
        summary = run_sweep(cfg)
        print(summary.text())
    else:
        summary = run_sweep(cfg, sink=sys.stdout.buffer.write)
        sys.stdout.buffer.flush()
        print(summary.text(), file=sys.stderr)
    return MISMATCH_EXIT if summary.mismatches else 0


def _run_audit(args) -> int:
    if args.A or args.B:
        if not (args.A and args.B):
            raise ValueError("single-correspondence audit needs both --A and --B")
        report = integral_check(_parse_torus(args))
        return _emit_single(report, args)
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = SweepConfig(
        model="torus",
        trials=args.trials,
        seed=seed,
        dim_max=args.dim_max,
        entry_bound=args.entry_bound,
        denom_bound=args.denom_bound,
        output=args.output,
    )
    summary = integral_audit(cfg)
    print(summary.text())
    return MISMATCH_EXIT if summary.mismatches else 0


_RUNNERS = {
    "torus": _run_torus,
    "ctorus": _run_ctorus,
    "cp1": _run_cp1,
    "sweep": _run_sweep,
    "audit-integral": _run_audit,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except (LefcorrError, ValueError, OSError) as exc:
        print(f"lefcorr: error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
