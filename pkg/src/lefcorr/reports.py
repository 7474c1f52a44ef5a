"""Verification reports and their machine-readable serializations.

A report always holds both sides of an identity as exact scalar strings
(floating cp1 results are marked with a leading "~" and carry the
comparison tolerance).  JSON field names and CSV column order are frozen;
sweep reproducibility depends on this serialization being deterministic,
so no timestamps or environment data appear here.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

CSV_COLUMNS = [
    "model",
    "parameters",
    "global",
    "local",
    "fixed_point_count",
    "match",
    "skipped_degenerate",
    "seed",
    "trial",
    "tolerance",
]


def format_float_scalar(value: complex | float) -> str:
    """Floating scalars are tagged with "~" so exact strings stay unambiguous."""
    z = complex(value)
    if z.imag == 0:
        return f"~{z.real!r}"
    sign = "+" if z.imag >= 0 else "-"
    return f"~{z.real!r}{sign}{abs(z.imag)!r}i"


@dataclass
class VerificationReport:
    model: str
    parameters: dict[str, str]
    global_side: str
    local_side: str
    fixed_point_count: int
    match: bool
    skipped_degenerate: int = 0
    seed: int | None = None
    trial: int | None = None
    tolerance: str | None = None
    notes: dict[str, str] = field(default_factory=dict, repr=False)

    def to_json_dict(self) -> dict:
        out = {
            "model": self.model,
            "parameters": self.parameters,
            "global": self.global_side,
            "local": self.local_side,
            "fixed_point_count": self.fixed_point_count,
            "match": self.match,
            "skipped_degenerate": self.skipped_degenerate,
            "seed": self.seed,
            "trial": self.trial,
        }
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
        return out


def _parameters_text(parameters: dict[str, str]) -> str:
    return " ".join(f"{k}={v}" for k, v in parameters.items())


def emit_report(report: VerificationReport, fmt: str = "json") -> bytes:
    """Serialize one report; fmt is one of json, csv, text."""
    if fmt == "json":
        return json.dumps(
            report.to_json_dict(), separators=(",", ":"), ensure_ascii=False
        ).encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerow(csv_row(report))
        return buf.getvalue().encode("utf-8")
    if fmt == "text":
        lines = [f"model: {report.model}"]
        for key, value in report.parameters.items():
            lines.append(f"  {key} = {value}")
        lines.append(f"global side: {report.global_side}")
        lines.append(f"local side:  {report.local_side}")
        lines.append(f"fixed points: {report.fixed_point_count}")
        if report.tolerance is not None:
            lines.append(f"tolerance: {report.tolerance}")
        for key, value in report.notes.items():
            lines.append(f"{key}: {value}")
        lines.append("MATCH" if report.match else "MISMATCH")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format: {fmt!r}")


def csv_row(report: VerificationReport) -> list[str]:
    return [
        report.model,
        _parameters_text(report.parameters),
        report.global_side,
        report.local_side,
        str(report.fixed_point_count),
        "true" if report.match else "false",
        str(report.skipped_degenerate),
        "" if report.seed is None else str(report.seed),
        "" if report.trial is None else str(report.trial),
        "" if report.tolerance is None else report.tolerance,
    ]


def csv_header_bytes() -> bytes:
    return (",".join(CSV_COLUMNS) + "\n").encode("utf-8")


def json_line(report: VerificationReport) -> bytes:
    return emit_report(report, "json") + b"\n"
