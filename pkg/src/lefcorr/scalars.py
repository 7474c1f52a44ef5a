"""Exact scalars: rationals and Gaussian rationals.

Every verification in this package compares two independently computed
quantities for *exact* equality, so the scalar layer must be free of
rounding.  ``ExactScalar`` stores a value of Q(i) as a pair of
arbitrary-precision rationals (real and imaginary part, backed by GMP via
gmpy2).  Plain rationals are the ``im == 0`` case; arithmetic promotes
automatically, so the smooth-torus code never pays for complex parts it
does not use.

Serialization (used verbatim in CLI arguments and JSON/CSV reports):

* rational values print as ``p/q`` with ``q > 0``, ``gcd(p, q) = 1`` and
  ``/1`` omitted, e.g. ``-3``, ``5/12``;
* values with a nonzero imaginary part print as ``re+im*i`` with each part
  in the rational form above, e.g. ``3/2-1/4*i``, ``0+1*i``.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

import gmpy2
from gmpy2 import mpq, mpz

__all__ = [
    "ExactScalar",
    "exact_sqrt",
    "mpq_sqrt",
    "parse_rational",
    "format_rational",
]

_RATIONAL_RE = _re.compile(r"^[+-]?\d+(?:/\d+)?$")
_COMPLEX_RE = _re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)?(?P<im>[+-]?\d+(?:/\d+)?)\*i$"
)

_COERCIBLE = (int, mpz, type(mpq(0)), Fraction)


def _mpq_from_str(text: str) -> mpq:
    # gmpy2 rejects a leading '+'
    return mpq(text[1:] if text.startswith("+") else text)


def parse_rational(text: str) -> mpq:
    """Parse ``p/q`` (or a bare integer) into an exact rational."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational in p/q form: {text!r}")
    return _mpq_from_str(text)


def format_rational(q) -> str:
    return str(mpq(q))


class ExactScalar:
    """An element of Q(i), exact and immutable.

    Mixed arithmetic with ``int``, ``gmpy2.mpq`` and ``fractions.Fraction``
    promotes to ``ExactScalar``.  Equality and hashing agree with the
    numeric tower for real values, so ``ExactScalar(3) == 3``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, ExactScalar):
            if im:
                raise ValueError("cannot combine an ExactScalar with an offset")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "ExactScalar":
        """Parse either the rational or the ``re+im*i`` serialization."""
        text = text.strip().replace(" ", "")
        if _RATIONAL_RE.match(text):
            return cls(_mpq_from_str(text))
        m = _COMPLEX_RE.match(text)
        if m:
            re_part = m.group("re")
            im_part = m.group("im")
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
            return cls(
                _mpq_from_str(re_part) if re_part else 0, _mpq_from_str(im_part)
            )
        raise ValueError(f"not an exact scalar: {text!r}")

    @staticmethod
    def _coerce(value):
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, _COERCIBLE):
            return ExactScalar(value)
        return None

    # -- predicates --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    @property
    def is_rational_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    @property
    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero ExactScalar")
        return ExactScalar(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ExactScalar(1) / self) ** (-exponent)
        result = ExactScalar(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def norm(self) -> mpq:
        """The field norm ``x * conj(x)`` as an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / conversion --------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"ExactScalar({str(self)!r})"


def mpq_sqrt(q) -> mpq | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = mpq(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    if gmpy2.is_square(num) and gmpy2.is_square(den):
        return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))
    return None


def exact_sqrt(s: ExactScalar) -> ExactScalar | None:
    """A square root of ``s`` inside Q(i), or None if there is none.

    For ``s = x + y*i`` with ``y != 0``: if ``s = (u + v*i)^2`` then
    ``u^2 + v^2 = sqrt(x^2 + y^2)`` and ``u^2 = (x + sqrt(x^2+y^2)) / 2``,
    so both square roots that occur are of plain rationals.
    """
    s = ExactScalar._coerce(s)
    if s is None:
        raise TypeError("exact_sqrt expects an exact scalar")
    x, y = s.re, s.im
    if y == 0:
        if x >= 0:
            r = mpq_sqrt(x)
            return None if r is None else ExactScalar(r)
        r = mpq_sqrt(-x)
        return None if r is None else ExactScalar(0, r)
    n = mpq_sqrt(x * x + y * y)
    if n is None:
        return None
    u = mpq_sqrt((x + n) / 2)
    if u is None or u == 0:
        return None
    v = y / (2 * u)
    return ExactScalar(u, v)
