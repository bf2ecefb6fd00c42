"""Exact roots of univariate polynomials with coefficients in Q(sqrt(d))."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import sympy

from .field import Scalar, get_field_d


class UnsupportedField(ValueError):
    """Roots exist over C but not inside Q(sqrt(d)); carries the polynomial."""

    def __init__(self, message: str, coefficients: Sequence[Scalar] = ()):
        super().__init__(message)
        self.coefficients = list(coefficients)


def _to_sympy(x: Scalar, root: sympy.Expr) -> sympy.Expr:
    x = Scalar.lift(x)
    return sympy.Rational(x.a.numerator, x.a.denominator) + sympy.Rational(x.b.numerator, x.b.denominator) * root


def _from_sympy(expr: sympy.Expr, d: int) -> Scalar:
    root = sympy.sqrt(d)
    expr = sympy.expand(sympy.radsimp(expr))
    b = expr.coeff(root)
    a = sympy.expand(expr - b * root)
    if not (a.is_Rational and b.is_Rational):
        raise UnsupportedField(f"{expr} is not in Q(sqrt({d}))")
    return Scalar(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)), d)


def polynomial_roots(coefficients: Sequence, d: int | None = None) -> List[Scalar]:
    """Roots with multiplicity of sum_k coefficients[k] x^k, sorted increasingly.

    Raises UnsupportedField when some irreducible factor over Q(sqrt(d)) has
    degree above one.
    """
    coeffs = [Scalar.lift(c) for c in coefficients]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    if d is None:
        ds = {c.d for c in coeffs if c.b}
        d = ds.pop() if ds else get_field_d()
    root = sympy.sqrt(d)
    x = sympy.Symbol("x")
    expr = sum(_to_sympy(c, root) * x**k for k, c in enumerate(coeffs))
    _, factors = sympy.factor_list(expr, x, extension=root)
    out: List[Scalar] = []
    for factor, mult in factors:
        poly = sympy.Poly(factor, x)
        if poly.degree() == 0:
            continue
        if poly.degree() > 1:
            raise UnsupportedField(f"factor {factor} has no roots in Q(sqrt({d}))", coeffs)
        c1, c0 = poly.all_coeffs()
        out.extend([_from_sympy(-c0 / c1, d)] * mult)
    return sorted(out)


def roots_from_power_sums(power_sums: Sequence, count: int, d: int | None = None) -> List[Scalar]:
    """Multiset of ``count`` numbers with the given power sums p_1..p_count (Newton's identities)."""
    if len(power_sums) < count:
        raise ValueError(f"need {count} power sums, got {len(power_sums)}")
    p = [Scalar.lift(v) for v in power_sums[:count]]
    e = [Scalar(1)]
    for k in range(1, count + 1):
        acc = Scalar(0)
        for i in range(1, k + 1):
            acc = acc + (-1) ** (i - 1) * e[k - i] * p[i - 1]
        e.append(acc / k)
    # x^count - e1 x^(count-1) + e2 x^(count-2) - ...
    coeffs = [(-1) ** (count - k) * e[count - k] for k in range(count + 1)]
    return polynomial_roots(coeffs, d)
