"""Exact arithmetic in Q[tau, 1/tau] for a formal transcendental tau.

The additive groups [tau]_{n,m} are the Laurent polynomials supported on
degrees -m..n; the starred variants also drop the constant term. The ring
is graded by level k = |degree|: the level-k component is the Q-span of
tau^k and tau^-k, and the product of homogeneous elements of levels j and k
lands in levels j+k and |j-k|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .certificate import ALGEBRAIC, TRANSCENDENTAL, Certificate
from .expr import TAU, Add, Const, Expr, Mul, Pow, parse_expr, simplify_constants
from .polyform import NotPolynomial, atoms, expand

Scalar = Union[int, Fraction]


class NegativeSupport(ValueError):
    """A Laurent polynomial with negative degrees has no image in Q[x]."""


class LaurentPoly:
    """Immutable sparse Laurent polynomial in tau with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[Tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, Fraction] = {}
        for k, c in items:
            acc[int(k)] = acc.get(int(k), Fraction(0)) + Fraction(c)
        self._terms = {k: c for k, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return from_expr(parse_expr(text))

    # -- queries

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def items(self):
        return self._terms.items()

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def is_rational(self) -> bool:
        return set(self._terms) <= {0}

    # -- arithmetic

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return lp_add(self, other)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return lp_add(self, -other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return lp_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            (k, c), = self._terms.items()
            return LaurentPoly({k * n: c**n})
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = lp_mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_laurent(self)

    # -- numerics

    def evaluate(self, tau_value: float) -> float:
        """Horner evaluation at a numeric stand-in for tau."""
        if not self._terms:
            return 0.0
        lo, hi = self.min_degree(), self.max_degree()
        acc = 0.0
        for k in range(hi, lo - 1, -1):
            acc = acc * tau_value + float(self.coeff(k))
        return acc * tau_value**lo

    def to_expr(self) -> Expr:
        out: Expr = Const(0)
        for k, c in sorted(self._terms.items(), reverse=True):
            term = Const(c) if k == 0 else Mul(Const(c), Pow(TAU, k))
            out = term if out == Const(0) else Add(out, term)
        return out


def format_laurent(p: LaurentPoly) -> str:
    """Text form sorted by descending degree, e.g. ``3*tau^2 - 1*tau^-1 + 1/2``."""
    if p.is_zero():
        return "0"
    parts: List[str] = []
    for k, c in sorted(p.items(), reverse=True):
        mag = str(abs(c))
        if k == 0:
            body = mag
        elif k == 1:
            body = f"{mag}*tau"
        else:
            body = f"{mag}*tau^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def from_expr(e: Expr) -> LaurentPoly:
    """Convert an expression in tau and rational constants."""
    try:
        poly = expand(simplify_constants(e))
    except NotPolynomial as exc:
        raise ValueError(f"not a Laurent polynomial in tau: {exc}") from exc
    extra = atoms(poly) - {TAU}
    if extra:
        raise ValueError(f"not a Laurent polynomial in tau: contains {sorted(map(str, extra))}")
    return LaurentPoly({dict(m).get(TAU, 0): c for m, c in poly.items()})


# ---------------------------------------------------------------- group and ring laws


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    terms = dict(p.items())
    for k, c in q.items():
        terms[k] = terms.get(k, Fraction(0)) + c
    return LaurentPoly(terms)


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    terms: Dict[int, Fraction] = {}
    for i, a in p.items():
        for j, b in q.items():
            terms[i + j] = terms.get(i + j, Fraction(0)) + a * b
    return LaurentPoly(terms)


def scalar_mul(c: Scalar, p: LaurentPoly) -> LaurentPoly:
    c = Fraction(c)
    return LaurentPoly({k: c * v for k, v in p.items()})


def membership(p: LaurentPoly, n: int, m: int, starred: bool = False) -> bool:
    """Whether ``p`` lies in [tau]_{n,m} (or [tau]*_{n,m} when ``starred``)."""
    if any(k > n or k < -m for k in p.support):
        return False
    return not (starred and 0 in p.support)


def dim(n: int, m: int) -> int:
    """Dimension of [tau]_{n,m} over Q; basis tau^n, ..., tau^-m."""
    return n + m + 1


# ---------------------------------------------------------------- grading


@dataclass(frozen=True)
class GradedComponent:
    level: int
    part: LaurentPoly

    def __post_init__(self):
        if not set(self.part.support) <= {self.level, -self.level}:
            raise ValueError(f"component at level {self.level} has support {self.part.support}")


def grade_decompose(p: LaurentPoly) -> List[GradedComponent]:
    """Split ``p`` into its nonzero homogeneous components, highest level first."""
    levels: Dict[int, Dict[int, Fraction]] = {}
    for k, c in p.items():
        levels.setdefault(abs(k), {})[k] = c
    return [GradedComponent(lvl, LaurentPoly(levels[lvl])) for lvl in sorted(levels, reverse=True)]


def reassemble(components: Sequence[GradedComponent]) -> LaurentPoly:
    out = LaurentPoly()
    for comp in components:
        out = lp_add(out, comp.part)
    return out


# ---------------------------------------------------------------- transcendence


TAU_AXIOM = Certificate(
    claim="tau is transcendental (hypothesis on the formal generator)",
    status=TRANSCENDENTAL,
    rule="axiom",
)


def classify_element(p: LaurentPoly, name: str = "tau", axiom: Certificate = TAU_AXIOM) -> Certificate:
    """Algebraic iff ``p`` is a rational constant, else transcendental.

    For non-constant ``p``: if ``p(t) = a`` with ``a`` algebraic, multiplying
    by ``t^m`` (``m`` = the most negative degree) gives a nonzero polynomial
    equation for ``t`` over the algebraic numbers, so ``t`` would be algebraic.
    """
    text = format_laurent(p).replace("tau", name)
    if p.is_rational():
        return Certificate(claim=f"{text} is rational", status=ALGEBRAIC, rule="rational")
    shift = max(0, -p.min_degree())
    cleared = lp_mul(p, LaurentPoly.monomial(shift))
    a_term = "a" if shift == 0 else f"a*{name}" if shift == 1 else f"a*{name}^{shift}"
    claim = (
        f"{text} is transcendental: were it an algebraic a, then "
        f"{format_laurent(cleared).replace('tau', name)} - {a_term} = 0 "
        f"would be a nonzero polynomial relation for {name}"
    )
    return Certificate(claim=claim, status=TRANSCENDENTAL, rule="P3", premises=(axiom,))


def same_class(p: LaurentPoly, q: LaurentPoly) -> bool:
    """``p ~ q``: the difference is rational, hence algebraic."""
    return lp_add(p, -q).is_rational()


def dense_approx(target: float, eps: float, tau_value: float) -> LaurentPoly:
    """``tau + q`` with ``q`` a decimal fraction and ``|tau_value + q - target| < eps``.

    ``q`` has denominator ``10**d`` with ``d`` the least exponent that works;
    the rounding and the error test are done in exact arithmetic.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    diff = Fraction(target) - Fraction(tau_value)
    d = 0
    while True:
        scale = 10**d
        q = Fraction(round(diff * scale), scale)
        if abs(diff - q) < eps:
            return LaurentPoly({1: 1, 0: q})
        d += 1


# ---------------------------------------------------------------- polynomial-ring isomorphism


def to_polynomial(p: LaurentPoly) -> List[Fraction]:
    """Coefficient list (low to high) of the image in Q[x]."""
    if p.is_zero():
        return []
    if p.min_degree() < 0:
        raise NegativeSupport(f"{p} has negative degrees")
    return [p.coeff(k) for k in range(p.max_degree() + 1)]


def from_polynomial(coeffs: Sequence[Scalar]) -> LaurentPoly:
    return LaurentPoly(enumerate(coeffs))


def to_laurent_polynomial(p: LaurentPoly) -> Tuple[int, List[Fraction]]:
    """``(offset, coeffs)`` with ``p = sum coeffs[i] * x^(offset + i)``."""
    if p.is_zero():
        return 0, []
    lo = p.min_degree()
    return lo, [p.coeff(k) for k in range(lo, p.max_degree() + 1)]


def from_laurent_polynomial(offset: int, coeffs: Sequence[Scalar]) -> LaurentPoly:
    return LaurentPoly((offset + i, c) for i, c in enumerate(coeffs))


def _trim(c: List[Fraction]) -> List[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(a[i] if i < len(a) else 0) + Fraction(b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def poly_mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * Fraction(y)
    return _trim(out)


def laurent_poly_mul(a: Tuple[int, Sequence[Scalar]], b: Tuple[int, Sequence[Scalar]]) -> Tuple[int, List[Fraction]]:
    prod = poly_mul(a[1], b[1])
    if not prod:
        return 0, []
    offset = a[0] + b[0]
    while prod and prod[0] == 0:
        prod.pop(0)
        offset += 1
    return offset, prod
