"""Expansion of expression trees into sparse Laurent polynomials over atoms.

An atom is ``x``, ``tau``, a named constant, or a function application.
A polynomial is a dict from monomials to nonzero Fractions, where a monomial
is a sorted tuple of ``(atom, exponent)`` pairs with nonzero exponents.
The imaginary unit is reduced with ``i^2 = -1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from .expr import (
    Add, Apply, Const, Div, E, Expr, I, Mul, NamedConst, ONE, Pow, Sub, Tau, Var,
    ZERO, simplify_constants, to_text,
)

Monomial = Tuple[Tuple[Expr, int], ...]
Poly = Dict[Monomial, Fraction]

UNIT: Monomial = ()


class NotPolynomial(Exception):
    pass


def _key(atom: Expr) -> tuple:
    order = 0 if isinstance(atom, Var) else 1
    return (order, to_text(atom))


def _normalize(pairs: Dict[Expr, int]) -> Tuple[int, Monomial]:
    sign = 1
    out = []
    for atom, k in pairs.items():
        if atom == I:
            k %= 4
            if k >= 2:
                sign = -sign
                k -= 2
        if k:
            out.append((atom, k))
    out.sort(key=lambda p: _key(p[0]))
    return sign, tuple(out)


def _mono_mul(a: Monomial, b: Monomial) -> Tuple[int, Monomial]:
    pairs: Dict[Expr, int] = dict(a)
    for atom, k in b:
        pairs[atom] = pairs.get(atom, 0) + k
    return _normalize(pairs)


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for m, c in q.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_scale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return {}
    return {m: c * v for m, v in p.items()}


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            sign, m = _mono_mul(m1, m2)
            s = out.get(m, 0) + sign * c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def poly_pow(p: Poly, n: int) -> Poly:
    if n < 0:
        if len(p) != 1:
            raise NotPolynomial("negative power of a non-monomial")
        (m, c), = p.items()
        sign, inv = _normalize({a: -k for a, k in m})
        p, n = {inv: sign / Fraction(c)}, -n
    result: Poly = {UNIT: Fraction(1)}
    base = p
    while n:
        if n & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        n >>= 1
    return result


def expand(expr: Expr) -> Poly:
    """Expand ``expr`` into a polynomial over atoms.

    Division is allowed only by monomials. Raises :class:`NotPolynomial`
    otherwise. Function arguments are simplified but not expanded.
    """
    if isinstance(expr, Const):
        return {UNIT: expr.value} if expr.value else {}
    if isinstance(expr, (Var, Tau, NamedConst)):
        sign, m = _normalize({expr: 1})
        return {m: Fraction(sign)} if m else {UNIT: Fraction(sign)}
    if isinstance(expr, Apply):
        arg = simplify_constants(expr.arg)
        if expr.func == "exp" and isinstance(arg, Const) and arg.value.denominator == 1:
            return poly_pow(expand(E), int(arg.value))
        return {((Apply(expr.func, arg), 1),): Fraction(1)}
    if isinstance(expr, Pow):
        return poly_pow(expand(expr.base), expr.exponent)
    left, right = expand(expr.left), expand(expr.right)
    if isinstance(expr, Add):
        return poly_add(left, right)
    if isinstance(expr, Sub):
        return poly_add(left, poly_scale(right, Fraction(-1)))
    if isinstance(expr, Mul):
        return poly_mul(left, right)
    if isinstance(expr, Div):
        if not right:
            raise NotPolynomial("division by zero")
        return poly_mul(left, poly_pow(right, -1))
    raise TypeError(f"not an expression: {expr!r}")


def try_expand(expr: Expr) -> Optional[Poly]:
    try:
        return expand(expr)
    except NotPolynomial:
        return None


def atoms(p: Poly) -> set:
    return {a for m in p for a, _ in m}


def degree_in(p: Poly, atom: Expr) -> Tuple[int, int]:
    """(min, max) exponent of ``atom`` over the monomials of ``p``."""
    ks = [dict(m).get(atom, 0) for m in p] or [0]
    return min(ks), max(ks)


def split_by(p: Poly, atom: Expr) -> Dict[int, Poly]:
    """Group ``p`` by the exponent of ``atom``; values are the coefficient polys."""
    out: Dict[int, Poly] = {}
    for m, c in p.items():
        d = dict(m)
        k = d.pop(atom, 0)
        _, rest = _normalize(d)
        out.setdefault(k, {})[rest] = c
    return out


def univariate(p: Poly, atom: Expr) -> Optional[list]:
    """Dense coefficient list (low to high) if ``p`` is a polynomial in ``atom`` alone."""
    coeffs: Dict[int, Fraction] = {}
    for m, c in p.items():
        if not m:
            coeffs[0] = c
        elif len(m) == 1 and m[0][0] == atom and m[0][1] > 0:
            coeffs[m[0][1]] = c
        else:
            return None
    if not coeffs:
        return [Fraction(0)]
    return [coeffs.get(k, Fraction(0)) for k in range(max(coeffs) + 1)]


def to_expr(p: Poly) -> Expr:
    """Rebuild an expression (terms in sorted monomial order)."""
    if not p:
        return ZERO
    terms = []
    for m in sorted(p, key=lambda m: [(_key(a), k) for a, k in m]):
        factor: Expr = ONE
        for atom, k in m:
            piece = Pow(atom, k)
            factor = piece if factor == ONE else Mul(factor, piece)
        terms.append(Mul(Const(p[m]), factor))
    out = terms[0]
    for t in terms[1:]:
        out = Add(out, t)
    return simplify_constants(out)
