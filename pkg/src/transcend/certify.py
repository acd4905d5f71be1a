"""Rule matching and certificate construction for transcendence claims.

Equation shapes (``f`` an elementary function, all polynomials rational):

    T1  g(f(x)) = h(x)             g in Q[t] nonconstant
    T2  h1(x) * f(g(x)) = h2(x)
    P1  (f(u(x)) + a1)^k = g(x)
    C1  F(x) = f(x)                F an inverse trigonometric function

Every rule is backed by the same argument: at an algebraic ``alpha`` the
polynomial side is algebraic while the function side is transcendental, as
long as the function's argument avoids the few algebraic points where the
function value is itself algebraic (0, and 1 for ``ln``). Those points are
enumerated as exceptional candidates and checked one by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .certificate import (
    ALGEBRAIC, TRANSCENDENTAL, UNKNOWN, Certificate, ExceptionalRoot,
)
from .expr import (
    Add, Apply, Const, Div, DomainError, E, Equation, Expr, ExprError, FUNCTIONS, I,
    INVERSE_TRIG, Mul, NamedConst, ONE, PI, Pow, Sub, Tau, Var, X, contains_var,
    evaluate, parse, parse_expr, simplify_constants, to_text,
)
from .laurent import LaurentPoly, TAU_AXIOM, classify_element
from .polyform import (
    Poly, atoms, degree_in, split_by, to_expr, try_expand, univariate,
)

FORWARD = tuple(f for f in FUNCTIONS if f not in INVERSE_TRIG)
P1_FUNCS = tuple(f for f in FORWARD if f != "ln")
INVERSE_OF = {"asin": "sin", "acos": "cos", "atan": "tan", "acot": "cot", "asec": "sec", "acsc": "csc"}

RESIDUAL_TOL = 1e-10

Coeffs = Tuple[Fraction, ...]  # dense, low to high


class UndefinedAtPoint(ExprError, ValueError):
    """The function has a pole (or no value) at the given argument."""


class VariablePresent(ExprError, ValueError):
    pass


# ---------------------------------------------------------------- dense rational polynomials


def _coeffs(seq: Sequence) -> Coeffs:
    c = [Fraction(v) for v in seq]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (Fraction(0),)


def _deg(c: Coeffs) -> int:
    return len(c) - 1 if any(c) else -1


def _peval(c: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for v in reversed(c):
        acc = acc * x + v
    return acc


def poly_text(c: Coeffs, var: str = "x") -> str:
    terms = []
    for k in range(len(c) - 1, -1, -1):
        v = c[k]
        if v == 0:
            continue
        mag = abs(v)
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        sign = "-" if v < 0 else "+"
        terms.append(body if not terms and sign == "+" else (f"-{body}" if not terms else f"{sign} {body}"))
    return " ".join(terms) or "0"


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(c: Coeffs) -> List[Fraction]:
    """All rational roots, by the rational-root theorem on the primitive integer form."""
    c = _coeffs(c)
    if _deg(c) < 1:
        return []
    lcm = math.lcm(*(v.denominator for v in c))
    ints = [int(v * lcm) for v in c]
    roots = set()
    while ints[0] == 0:
        roots.add(Fraction(0))
        ints.pop(0)
    if len(ints) > 1:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for r in (Fraction(p, q), Fraction(-p, q)):
                    if _peval(c, r) == 0:
                        roots.add(r)
    return sorted(roots)


def _deflate(c: Coeffs, r: Fraction) -> Coeffs:
    """Quotient of ``c`` by ``x - r`` (exact division assumed)."""
    hi = list(reversed(c))
    out = [hi[0]]
    for v in hi[1:-1]:
        out.append(v + out[-1] * r)
    return _coeffs(list(reversed(out)))


def _irrational_part(c: Coeffs) -> Coeffs:
    """``c`` with every rational root divided out (with multiplicity)."""
    for r in rational_roots(c):
        while _deg(c) >= 1 and _peval(c, r) == 0:
            c = _deflate(c, r)
    return c


def _sub_const(c: Coeffs, v: Fraction) -> Coeffs:
    return _coeffs([c[0] - v, *c[1:]])


def _poly_expr(c: Coeffs) -> Expr:
    return parse_expr(poly_text(c)) if _deg(c) >= 0 else Const(0)


# ---------------------------------------------------------------- rule forms


@dataclass(frozen=True)
class T1:
    g: Coeffs
    f: str
    h: Coeffs
    name = "T1"


@dataclass(frozen=True)
class T2:
    h1: Coeffs
    f: str
    g: Coeffs
    h2: Coeffs
    name = "T2"


@dataclass(frozen=True)
class P1:
    f: str
    a1: Fraction
    k: int
    g: Coeffs
    inner: Coeffs
    name = "P1"


@dataclass(frozen=True)
class C1:
    inverse: str
    f: Coeffs
    name = "C1"


@dataclass(frozen=True)
class NumLaurent:
    generator: Expr
    poly: LaurentPoly
    name = "NUM_LAURENT"


@dataclass(frozen=True)
class NumComplex:
    re: Expr
    im: Expr
    name = "NUM_COMPLEX"


RuleForm = Union[T1, T2, P1, C1, NumLaurent, NumComplex]


@dataclass(frozen=True)
class NoMatch:
    reason: str
    polynomial: Optional[Poly] = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return False


# ---------------------------------------------------------------- axioms and exceptional values

# f(a) is algebraic (value given) or undefined (None) at these rational points
_SPECIAL_VALUES: Dict[Tuple[str, Fraction], Optional[Fraction]] = {
    ("exp", Fraction(0)): Fraction(1),
    ("ln", Fraction(1)): Fraction(0),
    ("ln", Fraction(0)): None,
    ("sin", Fraction(0)): Fraction(0),
    ("cos", Fraction(0)): Fraction(1),
    ("tan", Fraction(0)): Fraction(0),
    ("sec", Fraction(0)): Fraction(1),
    ("csc", Fraction(0)): None,
    ("cot", Fraction(0)): None,
    ("sinh", Fraction(0)): Fraction(0),
    ("cosh", Fraction(0)): Fraction(1),
    ("tanh", Fraction(0)): Fraction(0),
    ("coth", Fraction(0)): None,
    ("asin", Fraction(0)): Fraction(0),
    ("acos", Fraction(1)): Fraction(0),
    ("atan", Fraction(0)): Fraction(0),
    ("asec", Fraction(1)): Fraction(0),
    ("asec", Fraction(0)): None,
    ("acsc", Fraction(0)): None,
}


def special_value(func: str, arg: Fraction) -> Optional[Fraction]:
    """Exact algebraic value of ``func(arg)`` if it has one we know, else None.

    Raises :class:`UndefinedAtPoint` at poles.
    """
    key = (func, Fraction(arg))
    if key in _SPECIAL_VALUES:
        value = _SPECIAL_VALUES[key]
        if value is None:
            raise UndefinedAtPoint(f"{func}({arg}) is undefined")
        return value
    return None


def axiom_lookup(func: str, arg: Fraction) -> Certificate:
    """Transcendence of an elementary function at a rational point."""
    arg = Fraction(arg)
    value = special_value(func, arg)
    text = f"{func}({arg})"
    if value is not None:
        return Certificate(claim=f"{text} = {value}", status=ALGEBRAIC, rule="exceptional-value")
    if func in FORWARD:
        return Certificate(
            claim=f"{text} is transcendental: {func} at a nonzero algebraic point"
                  + (" other than 1" if func == "ln" else ""),
            status=TRANSCENDENTAL, rule="axiom")
    return Certificate(claim=f"no rule decides {text}", status=UNKNOWN, rule="none")


def _function_axiom(func: str) -> Certificate:
    excluded = "0 and 1" if func == "ln" else "0"
    return Certificate(
        claim=f"{func}(a) is transcendental for every algebraic a other than {excluded}",
        status=TRANSCENDENTAL, rule="axiom")


_CONSTANT_AXIOMS = {
    E: Certificate(claim="e is transcendental", status=TRANSCENDENTAL, rule="axiom"),
    PI: Certificate(claim="pi is transcendental", status=TRANSCENDENTAL, rule="axiom"),
    Tau(): TAU_AXIOM,
}


# ---------------------------------------------------------------- trigonometric rewriting

# f^2 in terms of its partner g: f^2 = c0 + c1 * g^2
_STANDARD = {"cos": ("sin", 1, -1), "tan": ("sec", -1, 1), "cot": ("csc", -1, 1)}
_DUAL = {"sin": ("cos", 1, -1), "sec": ("tan", 1, 1), "csc": ("cot", 1, 1)}


def _square_in_partner(func: str, arg: Expr, table) -> Expr:
    partner, c0, c1 = table[func]
    g2 = Pow(Apply(partner, arg), 2)
    if c1 == -1:
        return Sub(Const(c0), g2)
    return Add(ONE, g2) if c0 == 1 else Sub(g2, ONE)


def _rewrite(e: Expr, table) -> Expr:
    if isinstance(e, Pow):
        base = _rewrite(e.base, table)
        if (isinstance(base, Apply) and base.func in table
                and e.exponent > 0 and e.exponent % 2 == 0):
            return Pow(_square_in_partner(base.func, base.arg, table), e.exponent // 2)
        return Pow(base, e.exponent)
    if isinstance(e, Apply):
        return Apply(e.func, _rewrite(e.arg, table))
    if isinstance(e, (Add, Sub, Mul, Div)):
        return type(e)(_rewrite(e.left, table), _rewrite(e.right, table))
    return e


def rewrite_even_trig(e: Union[Expr, Equation]) -> Union[Expr, Equation]:
    """Rewrite even powers: cos^2 -> 1 - sin^2, tan^2 -> sec^2 - 1, cot^2 -> csc^2 - 1."""
    if isinstance(e, Equation):
        return Equation(rewrite_even_trig(e.lhs), rewrite_even_trig(e.rhs))
    return simplify_constants(_rewrite(e, _STANDARD))


def _merge_trig_pairs(p: Poly) -> Poly:
    """If two partner functions of one argument both occur and one of them only
    at even powers, eliminate it. Works on expanded forms, so it also catches
    squares that were not explicit powers in the input."""
    present = {a for a in atoms(p) if isinstance(a, Apply)}
    for table in (_STANDARD, _DUAL):
        for atom in present:
            if atom.func not in table:
                continue
            partner = Apply(table[atom.func][0], atom.arg)
            if partner not in present:
                continue
            if all(k % 2 == 0 and k >= 0 for m in p for a, k in m if a == atom):
                q = try_expand(_rewrite(to_expr(p), {atom.func: table[atom.func]}))
                if q is not None and atom not in atoms(q):
                    return q
    return p


# ---------------------------------------------------------------- matching


def _x_poly(p: Poly) -> Optional[Coeffs]:
    c = univariate(p, X)
    return _coeffs(c) if c is not None else None


def _inner_poly(atom: Apply) -> Optional[Coeffs]:
    p = try_expand(atom.arg)
    return _x_poly(p) if p is not None else None


def _expanded_residual(eq: Equation) -> Optional[Poly]:
    eq = rewrite_even_trig(eq)
    p = try_expand(simplify_constants(Sub(eq.lhs, eq.rhs)))
    if p is None:
        return None
    return _merge_trig_pairs(p)


def _match_poly(p: Poly) -> Union[RuleForm, NoMatch]:
    others = atoms(p) - {X}
    if not others:
        return NoMatch("polynomial in x with rational coefficients", polynomial=p)
    if len(others) > 1:
        return NoMatch("more than one transcendental ingredient", polynomial=p)
    (atom,) = others
    if not isinstance(atom, Apply):
        return NoMatch(f"{to_text(atom)} occurs as a coefficient", polynomial=p)
    inner = _inner_poly(atom)
    if inner is None or _deg(inner) < 1:
        return NoMatch(f"argument of {to_text(atom)} is not a nonconstant rational polynomial", polynomial=p)
    parts = split_by(p, atom)
    if min(parts) < 0:
        return NoMatch(f"{to_text(atom)} occurs with a negative power", polynomial=p)
    coeffs = {k: _x_poly(v) for k, v in parts.items()}
    if any(c is None for c in coeffs.values()):
        return NoMatch("coefficients are not polynomials in x", polynomial=p)
    top = max(coeffs)
    rest = coeffs.get(0, (Fraction(0),))
    neg_rest = _coeffs([-v for v in rest])
    f = atom.func
    constant_coeffs = all(_deg(coeffs[k]) <= 0 for k in coeffs if k >= 1)
    is_x = inner == (Fraction(0), Fraction(1))

    if f in FORWARD and top == 1 and not (_deg(coeffs[1]) == 0 and is_x):
        return T2(h1=coeffs[1], f=f, g=inner, h2=neg_rest)
    if f in FORWARD and is_x and constant_coeffs:
        g = _coeffs([0] + [coeffs.get(k, (Fraction(0),))[0] for k in range(1, top + 1)])
        return T1(g=g, f=f, h=neg_rest)
    if f in P1_FUNCS and constant_coeffs:
        form = _match_binomial(f, inner, coeffs, top, rest)
        if form is not None:
            return form
    if f in INVERSE_TRIG and is_x and top == 1 and constant_coeffs:
        c = coeffs[1][0]
        return C1(inverse=f, f=_coeffs([-v / c for v in rest]))
    return NoMatch(f"no rule shape fits the occurrence of {to_text(atom)}", polynomial=p)


def _match_binomial(f, inner, coeffs, k, rest) -> Optional[P1]:
    """Recognize ``c * ((t + a1)^k - a1^k) + rest(x)`` with ``t = f(inner)``."""
    c = coeffs[k][0]
    a1 = Fraction(0) if k == 1 else coeffs.get(k - 1, (Fraction(0),))[0] / (k * c)
    for i in range(1, k):
        want = c * math.comb(k, i) * a1 ** (k - i)
        if coeffs.get(i, (Fraction(0),))[0] != want:
            return None
    g = _coeffs([(c * a1**k if j == 0 else 0) - (rest[j] if j < len(rest) else 0)
                 for j in range(max(len(rest), 1))])
    g = _coeffs([v / c for v in g])
    return P1(f=f, a1=a1, k=k, g=g, inner=inner)


def match_rule(eq: Union[Equation, str]) -> Union[RuleForm, NoMatch]:
    """First matching shape in the order T2, T1, P1, C1 (after trig rewriting)."""
    if isinstance(eq, str):
        eq = _as_equation(eq)
    p = _expanded_residual(eq)
    if p is None:
        return NoMatch("not a polynomial in x and elementary function values")
    return _match_poly(p)


def _as_equation(text: str) -> Equation:
    parsed = parse(text)
    if not isinstance(parsed, Equation):
        raise ValueError(f"expected an equation: {text!r}")
    return parsed


# ---------------------------------------------------------------- exceptional candidates


def _candidate_sources(form: RuleForm) -> List[Tuple[str, Coeffs]]:
    x = (Fraction(0), Fraction(1))
    if isinstance(form, T1):
        src = [("the argument x", x)]
        if form.f == "ln":
            src.append(("x - 1", _sub_const(x, Fraction(1))))
        return src
    if isinstance(form, T2):
        src = [("the inner argument", form.g), ("the factor h1", form.h1)]
        if form.f == "ln":
            src.append(("the inner argument minus 1", _sub_const(form.g, Fraction(1))))
        return [(n, c) for n, c in src if _deg(c) >= 1]
    if isinstance(form, P1):
        return [("the inner argument", form.inner)]
    if isinstance(form, C1):
        # an algebraic solution needs f(alpha) = 0, so it is a root of f
        src = [("the argument x", x)]
        if _deg(form.f) >= 1:
            src.append(("the right-hand side", form.f))
        return src
    raise TypeError(f"no candidates for {form!r}")


def exceptional_candidates(form: RuleForm) -> List[Fraction]:
    """Rational points where the rule's argument breaks down."""
    roots = set()
    for _, c in _candidate_sources(form):
        roots.update(rational_roots(c))
    return sorted(roots)


def unexamined_candidates(form: RuleForm) -> List[Tuple[str, Coeffs]]:
    """Factors whose (irrational) roots are not examined."""
    if isinstance(form, C1):
        return []
    out = []
    for name, c in _candidate_sources(form):
        rest = _irrational_part(c)
        if _deg(rest) >= 1:
            out.append((name, rest))
    return out


# ---------------------------------------------------------------- exact substitution


class _Opaque(Exception):
    pass


def exact_value(e: Expr, x: Fraction) -> Optional[Fraction]:
    """Value of ``e`` at rational ``x`` when it is a known rational, else None.

    Raises :class:`UndefinedAtPoint` when ``e`` is undefined at ``x``.
    """
    def ev(n: Expr) -> Fraction:
        if isinstance(n, Const):
            return n.value
        if isinstance(n, Var):
            return x
        if isinstance(n, (NamedConst, Tau)):
            raise _Opaque
        if isinstance(n, Apply):
            v = special_value(n.func, ev(n.arg))
            if v is None:
                raise _Opaque
            return v
        if isinstance(n, Pow):
            b = ev(n.base)
            if b == 0 and n.exponent < 0:
                raise UndefinedAtPoint("division by zero")
            return b**n.exponent
        if isinstance(n, Mul):
            results = []
            opaque = False
            for side in (n.left, n.right):
                try:
                    results.append(ev(side))
                except _Opaque:
                    opaque = True
            if any(r == 0 for r in results):
                return Fraction(0)
            if opaque:
                raise _Opaque
            return results[0] * results[1]
        a, b = ev(n.left), ev(n.right)
        if isinstance(n, Add):
            return a + b
        if isinstance(n, Sub):
            return a - b
        if b == 0:
            raise UndefinedAtPoint("division by zero")
        return a / b

    try:
        return ev(e)
    except _Opaque:
        return None


def _check_candidate(residual: Expr, c: Fraction) -> Tuple[Optional[ExceptionalRoot], str]:
    """Decide whether ``x = c`` solves ``residual = 0``; returns (exception, note)."""
    try:
        v = exact_value(residual, c)
    except UndefinedAtPoint:
        return None, f"x = {c}: equation undefined there"
    if v is not None:
        if v == 0:
            return ExceptionalRoot(c, ALGEBRAIC, Fraction(0)), f"x = {c}: exact solution"
        return None, f"x = {c}: residual {v}, not a solution"
    try:
        r = evaluate(residual, complex(c))
    except DomainError:
        return None, f"x = {c}: equation undefined there"
    if abs(r) < RESIDUAL_TOL:
        res = r.real if r.imag == 0 else r
        return ExceptionalRoot(c, UNKNOWN, res), f"x = {c}: numerically a solution (|residual| = {abs(r):.3g})"
    return None, f"x = {c}: residual {abs(r):.6g} (numeric), not a solution"


# ---------------------------------------------------------------- equations


def _describe(form: RuleForm) -> str:
    if isinstance(form, T1):
        return (f"g({form.f}(x)) = h(x) with g(t) = {poly_text(form.g, 't')} nonconstant "
                f"and h(x) = {poly_text(form.h)}")
    if isinstance(form, T2):
        return (f"h1(x)*{form.f}(g(x)) = h2(x) with h1 = {poly_text(form.h1)}, "
                f"g = {poly_text(form.g)}, h2 = {poly_text(form.h2)}")
    if isinstance(form, P1):
        return (f"({form.f}({poly_text(form.inner)}) + {form.a1})^{form.k} = {poly_text(form.g)}")
    if isinstance(form, C1):
        return f"{form.inverse}(x) = {poly_text(form.f)}"
    return repr(form)


def _rule_premises(form: RuleForm) -> List[Certificate]:
    if isinstance(form, C1):
        fwd = INVERSE_OF[form.inverse]
        ax = _function_axiom(fwd)
        return [ax, Certificate(
            claim=(f"if alpha is algebraic and {form.inverse}(alpha) = f(alpha) = b != 0, "
                   f"then alpha = {fwd}(b) is transcendental; so an algebraic solution has f(alpha) = 0"),
            status=TRANSCENDENTAL, rule="C1-inversion", premises=(ax,))]
    ax = _function_axiom(form.f)
    premises = [ax]
    if isinstance(form, T1):
        premises.append(Certificate(
            claim=(f"g(t) = {poly_text(form.g, 't')} is nonconstant over Q, so g(t) is "
                   f"transcendental whenever t is"),
            status=TRANSCENDENTAL, rule="P3"))
        if form.f != "ln" and 1 <= _deg(form.g) <= 4:
            premises.append(Certificate(
                claim=f"degree {_deg(form.g)} <= 4 case: subsumed by the T1 rule",
                status=TRANSCENDENTAL, rule="P2", premises=(premises[-1],)))
    elif isinstance(form, P1):
        premises.append(Certificate(
            claim=(f"at algebraic alpha, {form.f}(u(alpha)) + {form.a1} would be a {form.k}-th root "
                   f"of the algebraic g(alpha), hence algebraic"),
            status=TRANSCENDENTAL, rule="P1-root", premises=(ax,)))
    return premises


def _unknown(claim: str) -> Certificate:
    return Certificate(claim=claim, status=UNKNOWN, rule="none")


def _classify_unmatched(eq: Equation, nm: NoMatch) -> Certificate:
    p = nm.polynomial
    if p is not None and atoms(p) <= {X}:
        if not p:
            return _unknown(f"{eq} holds identically; every x, transcendental or not, solves it")
        if degree_in(p, X) == (0, 0):
            return Certificate(claim=f"{eq} has no solutions", status=ALGEBRAIC, rule="rational-polynomial")
        return Certificate(claim=f"every solution of {eq} is algebraic: it is a rational polynomial equation",
                           status=ALGEBRAIC, rule="rational-polynomial")
    if p is not None:
        linear = _classify_linear(eq, p)
        if linear is not None:
            return linear
    return _unknown(f"no rule applies to {eq}: {nm.reason}")


def _classify_linear(eq: Equation, p: Poly) -> Optional[Certificate]:
    """``a*x + b = 0`` with rational ``a`` and a closed-form number ``b``."""
    if any(contains_var(a) for a in atoms(p) - {X}):
        return None
    parts = split_by(p, X)
    if set(parts) != {0, 1} or set(parts[1]) != {()}:
        return None
    a = parts[1][()]
    solution = simplify_constants(to_expr({m: -c / a for m, c in parts[0].items()}))
    cert = classify_number(solution)
    return Certificate(claim=f"the only solution of {eq} is x = {to_text(solution)}",
                       status=cert.status, rule="linear", premises=(cert,))


def classify_equation(eq: Union[Equation, str]) -> Certificate:
    """Certificate for the solutions of ``eq``.

    On a rule match every solution is transcendental except the exceptional
    candidates that actually solve the equation; those are listed with their
    own status.
    """
    if isinstance(eq, str):
        eq = _as_equation(eq)
    eq = Equation(simplify_constants(eq.lhs), simplify_constants(eq.rhs))
    form = match_rule(eq)
    if isinstance(form, NoMatch):
        return _classify_unmatched(eq, form)

    residual = simplify_constants(Sub(eq.lhs, eq.rhs))
    exceptions = []
    notes = []
    candidates = exceptional_candidates(form)
    for c in candidates:
        exc, note = _check_candidate(residual, c)
        notes.append(note)
        if exc is not None:
            exceptions.append(exc)

    premises = _rule_premises(form)
    if candidates:
        premises.append(Certificate(
            claim="exceptional candidates " + "; ".join(notes),
            status=ALGEBRAIC, rule="exceptional-candidates"))
    for name, c in unexamined_candidates(form):
        premises.append(Certificate(
            claim=f"irrational roots of {poly_text(c)} ({name}) were not examined",
            status=UNKNOWN, rule="unexamined-candidates"))
    scope = "real solution" if isinstance(form, P1) else "solution"
    claim = f"every {scope} of {eq} is transcendental"
    if exceptions:
        claim += " except " + ", ".join(f"x = {e.root}" for e in exceptions)
    claim += f" [{_describe(form)}]"
    return Certificate(claim=claim, status=TRANSCENDENTAL, rule=form.name,
                       premises=tuple(premises), exceptions=tuple(exceptions))


# ---------------------------------------------------------------- numbers


def _fold_special(e: Expr) -> Expr:
    """Replace ``f(a)`` by its exact value at the exceptional rational points."""
    if isinstance(e, Apply):
        arg = simplify_constants(_fold_special(e.arg))
        if isinstance(arg, Const):
            v = special_value(e.func, arg.value)
            if v is not None:
                return Const(v)
        return Apply(e.func, arg)
    if isinstance(e, Pow):
        return Pow(_fold_special(e.base), e.exponent)
    if isinstance(e, (Add, Sub, Mul, Div)):
        return type(e)(_fold_special(e.left), _fold_special(e.right))
    return e


def _atom_certificate(atom: Expr) -> Certificate:
    if atom in _CONSTANT_AXIOMS:
        return _CONSTANT_AXIOMS[atom]
    if isinstance(atom, Apply) and isinstance(atom.arg, Const):
        return axiom_lookup(atom.func, atom.arg.value)
    return _unknown(f"no rule decides {to_text(atom)}")


def _classify_real_poly(p: Poly, text: str) -> Certificate:
    gens = atoms(p)
    if not gens:
        value = p.get((), Fraction(0))
        return Certificate(claim=f"{text} = {value} is rational", status=ALGEBRAIC, rule="rational")
    if len(gens) > 1:
        p = _merge_trig_pairs(p)
        gens = atoms(p)
    if len(gens) != 1:
        names = ", ".join(sorted(to_text(a) for a in gens))
        return _unknown(f"{text} mixes several transcendental quantities ({names})")
    (gen,) = gens
    base = _atom_certificate(gen)
    if base.status is not TRANSCENDENTAL:
        return _unknown(f"{text}: {base.claim}")
    laurent = LaurentPoly({dict(m).get(gen, 0): c for m, c in p.items()})
    if laurent == LaurentPoly.monomial(1):
        return base
    return classify_element(laurent, name=to_text(gen), axiom=base)


def _is_real(e: Expr) -> bool:
    try:
        evaluate(e, 0.0, tau_value=math.e, real_only=True)
    except (DomainError, ZeroDivisionError):
        return False
    return True


def classify_number(expr: Union[Expr, str]) -> Certificate:
    """Certificate for a closed-form constant (no ``x``)."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    if contains_var(expr):
        raise VariablePresent(f"{to_text(expr)} contains the unknown x")
    text = to_text(expr)
    e = simplify_constants(_fold_special(rewrite_even_trig(expr)))
    p = try_expand(e)
    if p is None:
        return _unknown(f"no rule decides {text}")
    if I not in atoms(p):
        return _classify_real_poly(p, text)

    re_part = {m: c for m, c in p.items() if I not in dict(m)}
    im_part = {tuple(t for t in m if t[0] != I): c for m, c in p.items() if I in dict(m)}
    re_e, im_e = to_expr(re_part), to_expr(im_part)
    if not (_is_real(re_e) and _is_real(im_e)):
        return _unknown(f"{text}: real and imaginary parts are not separable")
    re_c = _classify_real_poly(re_part, to_text(re_e))
    im_c = _classify_real_poly(im_part, to_text(im_e))
    statuses = {re_c.status, im_c.status}
    if TRANSCENDENTAL in statuses:
        premises = tuple(c for c in (re_c, im_c) if c.status is TRANSCENDENTAL)
        return Certificate(
            claim=(f"{text} = a + b*i with a = {to_text(re_e)}, b = {to_text(im_e)} real and not both "
                   f"algebraic; were a + b*i algebraic, so would be a - b*i, and then a and b"),
            status=TRANSCENDENTAL, rule="P5", premises=premises)
    if statuses == {ALGEBRAIC}:
        return Certificate(claim=f"{text} has rational real and imaginary parts",
                           status=ALGEBRAIC, rule="rational", premises=(re_c, im_c))
    return _unknown(f"{text}: neither part is certified transcendental")


def match_number(expr: Union[Expr, str]) -> Union[RuleForm, NoMatch]:
    """The NUM_LAURENT / NUM_COMPLEX shape of a constant, if any."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    e = simplify_constants(_fold_special(rewrite_even_trig(expr)))
    p = try_expand(e)
    if p is None:
        return NoMatch("not a polynomial in constants")
    if I in atoms(p):
        re_part = {m: c for m, c in p.items() if I not in dict(m)}
        im_part = {tuple(t for t in m if t[0] != I): c for m, c in p.items() if I in dict(m)}
        return NumComplex(to_expr(re_part), to_expr(im_part))
    p = _merge_trig_pairs(p)
    gens = atoms(p)
    if len(gens) == 1:
        (gen,) = gens
        return NumLaurent(gen, LaurentPoly({dict(m).get(gen, 0): c for m, c in p.items()}))
    return NoMatch("not a Laurent polynomial in one generator", polynomial=p)


def classify(text: str) -> Certificate:
    """Classify an equation or a closed-form number given as text."""
    parsed = parse(text)
    if isinstance(parsed, Equation):
        return classify_equation(parsed)
    return classify_number(parsed)
