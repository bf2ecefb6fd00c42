"""Exact scalars in Q or a real quadratic extension Q(sqrt(d))."""

from __future__ import annotations

import math
import re
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Union

_session_d = 2


class FieldError(ArithmeticError):
    """Raised when two scalars live in different quadratic extensions."""


class ZeroDivision(ZeroDivisionError):
    pass


def _is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def get_field_d() -> int:
    return _session_d


def set_field_d(d: int) -> None:
    """Set the discriminant used for new quadratic scalars."""
    global _session_d
    if not _is_squarefree(int(d)):
        raise ValueError(f"d must be a square-free integer >= 2, got {d}")
    _session_d = int(d)


@contextmanager
def field_d(d: int) -> Iterator[None]:
    old = _session_d
    set_field_d(d)
    try:
        yield
    finally:
        set_field_d(old)


Number = Union[int, Fraction, "Scalar"]


class Scalar:
    """a + b*sqrt(d) with rational a, b.

    Scalars with b == 0 behave exactly like the rational a: they compare
    and hash equal to the corresponding ``Fraction``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Number = 0, b: Number = 0, d: int | None = None):
        if isinstance(a, Scalar):
            if b:
                raise TypeError("cannot combine a Scalar with an extra sqrt part")
            self.a, self.b, self.d = a.a, a.b, a.d
            return
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = _session_d if d is None else int(d)

    # -- coercion -----------------------------------------------------
    @staticmethod
    def lift(x: Number) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    def _common_d(self, other: "Scalar") -> int:
        if self.b and other.b and self.d != other.d:
            raise FieldError(f"sqrt({self.d}) and sqrt({other.d}) do not mix")
        if self.b:
            return self.d
        return other.d if other.b else self.d

    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is not rational")
        return self.a

    def conjugate(self) -> "Scalar":
        return Scalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        try:
            o = Scalar.lift(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.a + o.a, self.b + o.b, self._common_d(o))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Scalar.lift(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.a - o.a, self.b - o.b, self._common_d(o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Scalar.lift(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(o)
        return Scalar(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivision("division by zero scalar")
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        try:
            o = Scalar.lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.lift(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        try:
            o = Scalar.lift(other)
        except TypeError:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return self.a == o.a
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d b^2
        cmp = a * a - self.d * b * b
        return sa if cmp > 0 else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- text -----------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def lift(x: Number) -> Scalar:
    return Scalar.lift(x)


def _frac_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x: Number) -> str:
    """Canonical text: ``p/q`` or ``p/q+r/s*sqrt(d)``."""
    x = Scalar.lift(x)
    if x.b == 0:
        return _frac_text(x.a)
    sign = "+" if x.b > 0 else "-"
    return f"{_frac_text(x.a)}{sign}{_frac_text(abs(x.b))}*sqrt({x.d})"


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})(?=$|\s*[+-]))?"
    rf"\s*(?:(?P<bs>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse the textual scalar forms accepted on the CLI and in JSON."""
    if not isinstance(text, str):
        raise ValueError(f"expected a scalar string, got {text!r}")
    s = text.strip()
    if not s:
        raise ValueError("empty scalar string")
    if "sqrt" not in s:
        try:
            return Scalar(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {text!r}") from exc
    m = _SCALAR_RE.match(s)
    if not m or m.group("d") is None:
        raise ValueError(f"bad scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("bs") == "-":
        b = -b
    d = int(m.group("d"))
    if not _is_squarefree(d):
        raise ValueError(f"sqrt({d}) is not square-free")
    return Scalar(a, b, d)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, m = q.numerator, q.denominator
    rn, rm = math.isqrt(n), math.isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def sqrt_in_field(x: Number, d: int | None = None) -> Scalar | None:
    """Return a square root of x inside Q(sqrt(d)), or None."""
    x = Scalar.lift(x)
    d = x.d if x.b else (_session_d if d is None else d)
    if x.b == 0:
        r = _rational_sqrt(x.a)
        if r is not None:
            return Scalar(r, 0, d)
        r = _rational_sqrt(x.a / d)
        if r is not None:
            return Scalar(0, r, d)
        return None
    # (p + q sqrt d)^2 = p^2 + d q^2 + 2pq sqrt d
    disc = _rational_sqrt(x.a * x.a - d * x.b * x.b)
    if disc is None:
        return None
    for p2 in ((x.a + disc) / 2, (x.a - disc) / 2):
        p = _rational_sqrt(p2)
        if p:
            q = x.b / (2 * p)
            cand = Scalar(p, q, d)
            if cand * cand == x:
                return cand
    return None


def is_integer(x: Number) -> bool:
    x = Scalar.lift(x)
    return x.b == 0 and x.a.denominator == 1


def is_half_integer_nonneg(x: Number) -> bool:
    """True for 0, 1/2, 1, 3/2, ..."""
    x = Scalar.lift(x)
    return x.b == 0 and x.a >= 0 and (2 * x.a).denominator == 1
