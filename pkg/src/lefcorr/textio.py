"""Text formats for matrices, vectors and multipliers.

Matrix text is row-major with rows separated by ';' and entries by ','
(e.g. "2,0;0,2").  Rational entries use "p/q".  Complex entries use the
ExactScalar form "x+y*i".  Multipliers of a complex torus use the compact
Gaussian-integer form "m" or "m+ni" (e.g. "1+1i", "3-2i").
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .scalars import ExactScalar, parse_rational


def parse_int_matrix(text: str) -> list[list[int]]:
    rows = []
    for row_text in text.strip().split(";"):
        row = []
        for entry in row_text.split(","):
            entry = entry.strip()
            try:
                row.append(int(entry))
            except ValueError:
                raise ValueError(f"matrix entry is not an integer: {entry!r}")
        rows.append(row)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix text is not square")
    return rows


def format_int_matrix(m) -> str:
    return ";".join(",".join(str(x) for x in row) for row in m)


def parse_rational_vector(text: str, n: int | None = None) -> tuple:
    entries = tuple(parse_rational(e) for e in text.strip().split(","))
    if n is not None and len(entries) != n:
        raise ValueError(f"expected a vector of length {n}, got {len(entries)}")
    return entries


def format_rational_vector(v) -> str:
    return ",".join(str(mpq(x)) for x in v)


def parse_scalar_matrix(text: str) -> list[list[ExactScalar]]:
    rows = []
    for row_text in text.strip().split(";"):
        rows.append([ExactScalar.parse(e) for e in row_text.split(",")])
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix text is not square")
    return rows


def format_scalar_matrix(m) -> str:
    return ";".join(",".join(str(x) for x in row) for row in m)


_GAUSS_RE = re.compile(
    r"^(?P<re>[+-]?\d+)?(?P<im>[+-]?\d*)i$"
)


def parse_multiplier(text: str) -> ExactScalar:
    """Parse "m" or "m+ni" into an exact Gaussian integer."""
    text = text.strip().replace(" ", "")
    if re.match(r"^[+-]?\d+$", text):
        return ExactScalar(int(text))
    m = _GAUSS_RE.match(text)
    if m:
        re_part = m.group("re")
        im_part = m.group("im")
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return ExactScalar(int(re_part) if re_part else 0, int(im_part))
    raise ValueError(f"not a multiplier in m or m+ni form: {text!r}")


def format_multiplier(mu: ExactScalar) -> str:
    if not mu.is_gaussian_integer:
        raise ValueError("multiplier is not a Gaussian integer")
    p, q = int(mu.re), int(mu.im)
    if q == 0:
        return str(p)
    return f"{p}{q:+}i"


def parse_offset(text: str) -> tuple:
    """Offset of a complex torus as lattice coordinates.

    Accepts the ExactScalar form "x+y*i" (coordinates (x, y) with respect
    to the lattice basis) or a bare rational "x" meaning (x, 0).
    """
    s = ExactScalar.parse(text)
    return (mpq(s.re), mpq(s.im))


def format_offset(c) -> str:
    return str(ExactScalar(c[0], c[1]))
