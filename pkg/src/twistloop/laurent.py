"""Laurent polynomials in t and the t_+ / t_- bases of their symmetric parts.

Here t_+ = t + 1/t and t_- = t - 1/t.  Symmetric Laurent polynomials are
polynomials in t_+; antisymmetric ones are t_- times such a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Mapping


class ZeroPoint(ValueError):
    """Evaluation of a Laurent polynomial at t = 0."""


def _clean(coeffs: Mapping[int, object]) -> Dict[int, object]:
    out = {}
    for n, c in coeffs.items():
        if isinstance(c, int):
            c = Fraction(c)
        if c:
            out[int(n)] = c
    return out


class LaurentPoly:
    """Finite sum of c_n t^n with exact coefficients; zero terms are pruned."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs = _clean(coeffs or {})

    @classmethod
    def monomial(cls, n: int, c=1) -> "LaurentPoly":
        return cls({n: c})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t_plus(cls) -> "LaurentPoly":
        return cls({1: 1, -1: 1})

    @classmethod
    def t_minus(cls) -> "LaurentPoly":
        return cls({1: 1, -1: -1})

    @classmethod
    def plus_minus_power(cls, a: int, b: int) -> "LaurentPoly":
        """t_+^a t_-^b."""
        return cls.t_plus() ** a * cls.t_minus() ** b

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({n: c * other for n, c in self.coeffs.items()})
        out: Dict[int, object] = {}
        for n, c in self.coeffs.items():
            for m, e in other.coeffs.items():
                out[n + m] = out.get(n + m, 0) + c * e
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        result = LaurentPoly({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{n}" for n, c in sorted(self.coeffs.items(), reverse=True))

    def involute(self) -> "LaurentPoly":
        return LaurentPoly({-n: c for n, c in self.coeffs.items()})

    def split_plus_minus(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        inv = self.involute()
        half = Fraction(1, 2)
        return (self + inv) * half, (self - inv) * half

    def eval(self, alpha) -> object:
        if not alpha:
            raise ZeroPoint("cannot evaluate a Laurent polynomial at 0")
        if isinstance(alpha, int):
            alpha = Fraction(alpha)
        total = Fraction(0)
        for n, c in self.coeffs.items():
            total = total + c * alpha**n
        return total

    def to_plus_basis(self) -> "PlusBasisExpansion":
        sym, anti = self.split_plus_minus()
        plus: Dict[int, object] = {}
        rest = sym
        # peel off the top degree with t_+^m, whose leading term is t^m
        while rest.coeffs:
            m = max(rest.coeffs)
            c = rest.coeffs[m]
            plus[m] = c
            rest = rest - LaurentPoly.t_plus() ** m * c
        minus: Dict[int, object] = {}
        rest = anti
        while rest.coeffs:
            m = max(rest.coeffs)
            c = rest.coeffs[m]
            minus[m - 1] = c
            rest = rest - LaurentPoly.plus_minus_power(m - 1, 1) * c
        return PlusBasisExpansion(_clean(plus), _clean(minus))


def laurent_involute(p: LaurentPoly) -> LaurentPoly:
    return p.involute()


def split_plus_minus(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    return p.split_plus_minus()


def eval_laurent(p: LaurentPoly, alpha):
    return p.eval(alpha)


def to_plus_basis(p: LaurentPoly) -> "PlusBasisExpansion":
    return p.to_plus_basis()


@dataclass(frozen=True)
class PlusBasisExpansion:
    """sum_a plus_part[a] t_+^a + sum_a minus_part[a] t_+^a t_-."""

    plus_part: Dict[int, object] = field(default_factory=dict)
    minus_part: Dict[int, object] = field(default_factory=dict)

    def to_laurent(self) -> LaurentPoly:
        total = LaurentPoly()
        for a, c in self.plus_part.items():
            total = total + LaurentPoly.t_plus() ** a * c
        for a, c in self.minus_part.items():
            total = total + LaurentPoly.plus_minus_power(a, 1) * c
        return total


def from_plus_basis(e: PlusBasisExpansion) -> LaurentPoly:
    return e.to_laurent()


def plus_reduction(a: int, b: int, c: int) -> Iterable[tuple[int, int, int]]:
    """Terms (coeff, a', b') of t_+^{a+2c} t_-^b rewritten with t_+^2 = t_-^2 + 4."""
    for j in range(c + 1):
        yield comb(c, j) * 4 ** (c - j), a, b + 2 * j
