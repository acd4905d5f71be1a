"""Expression trees over one unknown ``x`` and the formal transcendental ``tau``.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``/``/``, then ``+``/``-``)::

    equation := expr "=" expr
    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" unary)?
    atom     := number | "e" | "pi" | "i" | "tau" | "x"
              | func "(" expr ")" | "(" expr ")"

Numbers are exact: ``1.7701`` becomes ``Fraction(17701, 10000)``. There is no
implicit multiplication, so ``2x`` is rejected.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

import numpy as np

Rational = Fraction

FUNCTIONS = (
    "exp", "ln", "sin", "cos", "tan", "csc", "sec", "cot",
    "sinh", "cosh", "tanh", "coth",
    "asin", "acos", "atan", "acot", "asec", "acsc",
)
INVERSE_TRIG = ("asin", "acos", "atan", "acot", "asec", "acsc")
ALIASES = {"arc" + name[1:]: name for name in INVERSE_TRIG}
NAMED_CONSTANTS = ("e", "pi", "i")

POLE_TOL = 1e-14


class ExprError(Exception):
    """Base class for errors raised by this module."""


class ParseError(ExprError, SyntaxError):
    """Malformed input; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownFunction(ParseError):
    pass


class DivisionByZero(ExprError, ZeroDivisionError):
    pass


class DomainError(ExprError, ValueError):
    pass


class MissingTau(ExprError, ValueError):
    pass


# ---------------------------------------------------------------- nodes


class Expr:
    """Base class of all expression nodes (immutable, structurally compared)."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True, eq=True)
class NamedConst(Expr):
    name: str  # one of NAMED_CONSTANTS


@dataclass(frozen=True, eq=True)
class Tau(Expr):
    pass


@dataclass(frozen=True, eq=True)
class Var(Expr):
    pass


@dataclass(frozen=True, eq=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, eq=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, eq=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, eq=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, eq=True)
class Pow(Expr):
    """Integer power. Use :func:`power` to build powers from arbitrary exponents."""

    base: Expr
    exponent: int


@dataclass(frozen=True, eq=True)
class Apply(Expr):
    func: str
    arg: Expr


@dataclass(frozen=True, eq=True)
class Equation:
    lhs: Expr
    rhs: Expr

    def __str__(self) -> str:
        return f"{to_text(self.lhs)} = {to_text(self.rhs)}"

    def residual(self) -> Expr:
        """``lhs - rhs`` as a single expression."""
        return Sub(self.lhs, self.rhs)


X = Var()
TAU = Tau()
E = NamedConst("e")
PI = NamedConst("pi")
I = NamedConst("i")
ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


def _is_const(e: Expr, value=None) -> bool:
    return isinstance(e, Const) and (value is None or e.value == value)


def power(base: Expr, exponent: Expr) -> Expr:
    """Build ``base ^ exponent`` honouring the power invariants.

    Integer constant exponents give :class:`Pow`; a negative exponent on
    anything but ``x``, ``tau`` or a nonzero constant becomes ``1 / base^n``.
    Any other exponent is rewritten as ``exp(exponent * ln(base))``
    (``exp(exponent)`` when the base is ``e``).
    """
    if not isinstance(exponent, Const) and _is_numeral(exponent):
        try:
            exponent = simplify_constants(exponent)
        except DivisionByZero:
            pass
    if isinstance(exponent, Const) and exponent.value.denominator == 1:
        n = int(exponent.value)
        if n < 0 and not _negative_power_ok(base):
            return Div(ONE, Pow(base, -n))
        return Pow(base, n)
    if base == E:
        return Apply("exp", exponent)
    return Apply("exp", Mul(exponent, Apply("ln", base)))


def _is_numeral(e: Expr) -> bool:
    """Built from rational constants by arithmetic alone."""
    if isinstance(e, Const):
        return True
    if isinstance(e, Pow):
        return _is_numeral(e.base)
    if isinstance(e, (Add, Sub, Mul, Div)):
        return _is_numeral(e.left) and _is_numeral(e.right)
    return False


def _negative_power_ok(base: Expr) -> bool:
    if isinstance(base, (Var, Tau, NamedConst)):
        return True
    return isinstance(base, Const) and base.value != 0


def negate(e: Expr) -> Expr:
    if isinstance(e, Const):
        return Const(-e.value)
    return Mul(Const(-1), e)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()=":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message: str, cls=ParseError):
        raise cls(message, self.tok[2], self.text)

    def accept(self, op: str) -> bool:
        if self.tok[0] == "op" and self.tok[1] == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            found = self.tok[1] or "end of input"
            self.error(f"expected {op!r}, found {found!r}")

    def top(self) -> Union[Expr, Equation]:
        lhs = self.expr()
        if self.accept("="):
            rhs = self.expr()
            result: Union[Expr, Equation] = Equation(lhs, rhs)
        else:
            result = lhs
        if self.tok[0] != "end":
            self.error(f"unexpected {self.tok[1]!r}")
        return result

    def expr(self) -> Expr:
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            if self.accept("*"):
                node = Mul(node, self.unary())
            elif self.accept("/"):
                node = Div(node, self.unary())
            else:
                return node

    def unary(self) -> Expr:
        if self.accept("-"):
            return negate(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.accept("^"):
            return power(base, self.unary())
        return base

    def atom(self) -> Expr:
        kind, value, pos = self.tok
        if kind == "num":
            self.i += 1
            return Const(Fraction(value))
        if kind == "name":
            self.i += 1
            if self.tok[0] == "op" and self.tok[1] == "(":
                func = ALIASES.get(value, value)
                if func not in FUNCTIONS:
                    raise UnknownFunction(f"unknown function {value!r}", pos, self.text)
                self.i += 1
                arg = self.expr()
                self.expect(")")
                return Apply(func, arg)
            if value == "x":
                return X
            if value == "tau":
                return TAU
            if value in NAMED_CONSTANTS:
                return NamedConst(value)
            if ALIASES.get(value, value) in FUNCTIONS:
                raise ParseError(f"function {value!r} needs an argument", self.tok[2], self.text)
            raise UnknownFunction(f"unknown name {value!r}", pos, self.text)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.error(f"unexpected {value or 'end of input'!r}")


def parse(text: str) -> Union[Expr, Equation]:
    """Parse an expression, or an equation if the text contains ``=``."""
    return _Parser(text).top()


def parse_expr(text: str) -> Expr:
    result = parse(text)
    if isinstance(result, Equation):
        raise ParseError("expected an expression, found an equation", text.index("="), text)
    return result


def parse_equation(text: str) -> Equation:
    result = parse(text)
    if not isinstance(result, Equation):
        raise ParseError("expected an equation containing '='", len(text), text)
    return result


# ---------------------------------------------------------------- printing

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2, Pow: 4}


def _const_text(v: Fraction) -> str:
    if v.denominator == 1:
        s = str(v.numerator)
    else:
        d = v.denominator
        twos = fives = 0
        while d % 2 == 0:
            d //= 2
            twos += 1
        while d % 5 == 0:
            d //= 5
            fives += 1
        if d == 1:
            places = max(twos, fives)
            digits = str(abs(v.numerator) * 10**places // v.denominator).rjust(places + 1, "0")
            s = ("-" if v < 0 else "") + digits[:-places] + "." + digits[-places:]
        else:
            s = f"{v.numerator}/{v.denominator}"
    if v < 0 or "/" in s:
        return f"({s})"
    return s


def _prec(e: Expr) -> int:
    return _PREC.get(type(e), 5)


def to_text(e: Expr) -> str:
    """Render ``e`` in the input grammar; ``parse(to_text(t)) == t`` for parsed trees."""
    if isinstance(e, Const):
        return _const_text(e.value)
    if isinstance(e, NamedConst):
        return e.name
    if isinstance(e, Tau):
        return "tau"
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Apply):
        return f"{e.func}({to_text(e.arg)})"
    if isinstance(e, Pow):
        base = to_text(e.base)
        if _prec(e.base) <= 4:
            base = f"({base})"
        return f"{base}^{e.exponent}"
    p = _PREC[type(e)]
    left = to_text(e.left)
    if _prec(e.left) < p:
        left = f"({left})"
    right = to_text(e.right)
    if _prec(e.right) <= p:
        right = f"({right})"
    op = {Add: " + ", Sub: " - ", Mul: "*", Div: "/"}[type(e)]
    return f"{left}{op}{right}"


# ---------------------------------------------------------------- simplification


def _add(a: Expr, b: Expr) -> Expr:
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value + b.value)
    if _is_const(a, 0):
        return b
    if _is_const(b, 0):
        return a
    return Add(a, b)


def _sub(a: Expr, b: Expr) -> Expr:
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value - b.value)
    if _is_const(b, 0):
        return a
    return Sub(a, b)


def _mul(a: Expr, b: Expr) -> Expr:
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value * b.value)
    if isinstance(b, Const):
        a, b = b, a
    if isinstance(a, Const):
        if a.value == 0:
            return ZERO
        if a.value == 1:
            return b
        if isinstance(b, Mul) and isinstance(b.left, Const):
            return _mul(Const(a.value * b.left.value), b.right)
        return Mul(a, b)
    if isinstance(a, Mul) and isinstance(a.left, Const):
        return _mul(a.left, _mul(a.right, b))
    if isinstance(b, Mul) and isinstance(b.left, Const):
        return _mul(b.left, _mul(a, b.right))
    return Mul(a, b)


def _div(a: Expr, b: Expr) -> Expr:
    if isinstance(b, Const):
        if b.value == 0:
            raise DivisionByZero(f"constant division by zero in {to_text(Div(a, b))}")
        if isinstance(a, Const):
            return Const(a.value / b.value)
        if b.value == 1:
            return a
    if _is_const(a, 0):
        return ZERO
    return Div(a, b)


def _pow(base: Expr, n: int) -> Expr:
    if isinstance(base, Const):
        if base.value == 0 and n < 0:
            raise DivisionByZero(f"zero raised to negative power {n}")
        return Const(base.value**n)
    if n == 0:
        return ONE
    if n == 1:
        return base
    if n < 0 and not _negative_power_ok(base):
        return _div(ONE, _pow(base, -n))
    return Pow(base, n)


def _apply(func: str, arg: Expr) -> Expr:
    if func == "exp" and _is_const(arg, 0):
        return ONE
    if func == "ln" and _is_const(arg, 1):
        return ZERO
    return Apply(func, arg)


def simplify_constants(e: Expr) -> Expr:
    """Fold exact constant arithmetic and apply the trivial identities.

    Only rational arithmetic is performed; ``pi``, ``e`` and function values
    at nonzero arguments stay symbolic.
    """
    if isinstance(e, (Const, NamedConst, Tau, Var)):
        return e
    if isinstance(e, Apply):
        return _apply(e.func, simplify_constants(e.arg))
    if isinstance(e, Pow):
        return _pow(simplify_constants(e.base), e.exponent)
    left = simplify_constants(e.left)
    right = simplify_constants(e.right)
    return {Add: _add, Sub: _sub, Mul: _mul, Div: _div}[type(e)](left, right)


def simplify_equation(eq: Equation) -> Equation:
    return Equation(simplify_constants(eq.lhs), simplify_constants(eq.rhs))


# ---------------------------------------------------------------- differentiation


def _sqrt(e: Expr) -> Expr:
    return Apply("exp", _mul(Const(Fraction(1, 2)), Apply("ln", e)))


def _outer_derivative(func: str, u: Expr) -> Expr:
    f = lambda name: Apply(name, u)  # noqa: E731
    if func == "exp":
        return f("exp")
    if func == "ln":
        return _div(ONE, u)
    if func == "sin":
        return f("cos")
    if func == "cos":
        return _mul(Const(-1), f("sin"))
    if func == "tan":
        return _add(ONE, _pow(f("tan"), 2))
    if func == "cot":
        return _mul(Const(-1), _add(ONE, _pow(f("cot"), 2)))
    if func == "sec":
        return _mul(f("sec"), f("tan"))
    if func == "csc":
        return _mul(Const(-1), _mul(f("csc"), f("cot")))
    if func == "sinh":
        return f("cosh")
    if func == "cosh":
        return f("sinh")
    if func == "tanh":
        return _sub(ONE, _pow(f("tanh"), 2))
    if func == "coth":
        return _sub(ONE, _pow(f("coth"), 2))
    if func == "asin":
        return _div(ONE, _sqrt(_sub(ONE, _pow(u, 2))))
    if func == "acos":
        return _div(Const(-1), _sqrt(_sub(ONE, _pow(u, 2))))
    if func == "atan":
        return _div(ONE, _add(ONE, _pow(u, 2)))
    if func == "acot":
        return _div(Const(-1), _add(ONE, _pow(u, 2)))
    # asec(u) = acos(1/u), acsc(u) = asin(1/u)
    root = _mul(_pow(u, 2), _sqrt(_sub(ONE, _div(ONE, _pow(u, 2)))))
    if func == "asec":
        return _div(ONE, root)
    if func == "acsc":
        return _div(Const(-1), root)
    raise ValueError(f"no derivative rule for {func}")


def _d(e: Expr) -> Expr:
    if isinstance(e, (Const, NamedConst, Tau)):
        return ZERO
    if isinstance(e, Var):
        return ONE
    if isinstance(e, Add):
        return _add(_d(e.left), _d(e.right))
    if isinstance(e, Sub):
        return _sub(_d(e.left), _d(e.right))
    if isinstance(e, Mul):
        return _add(_mul(_d(e.left), e.right), _mul(e.left, _d(e.right)))
    if isinstance(e, Div):
        num = _sub(_mul(_d(e.left), e.right), _mul(e.left, _d(e.right)))
        return _div(num, _pow(e.right, 2))
    if isinstance(e, Pow):
        du = _d(e.base)
        if _is_const(du, 0):
            return ZERO
        return _mul(_mul(Const(e.exponent), _pow(e.base, e.exponent - 1)), du)
    if isinstance(e, Apply):
        du = _d(e.arg)
        if _is_const(du, 0):
            return ZERO
        return _mul(_outer_derivative(e.func, e.arg), du)
    raise TypeError(f"not an expression: {e!r}")


def differentiate(e: Expr) -> Expr:
    """d/dx of ``e``, constant-simplified."""
    return simplify_constants(_d(simplify_constants(e)))


# ---------------------------------------------------------------- evaluation


def _near_pole(u: complex, offset: float, period: float = math.pi) -> bool:
    k = round((u.real - offset) / period)
    return abs(u - (offset + k * period)) < POLE_TOL


def _real_apply(func: str, u: float) -> Optional[float]:
    """Real-valued function value, or None if ``u`` is outside the real domain."""
    if func == "ln":
        return math.log(u) if u > 0 else None
    if func in ("asin", "acos"):
        if abs(u) > 1:
            return None
        return math.asin(u) if func == "asin" else math.acos(u)
    if func in ("asec", "acsc"):
        if abs(u) < 1:
            return None
        return math.acos(1 / u) if func == "asec" else math.asin(1 / u)
    if func == "acot":
        return math.pi / 2 if u == 0 else math.atan(1 / u)
    table: dict[str, Callable[[float], float]] = {
        "exp": math.exp, "sin": math.sin, "cos": math.cos, "tan": math.tan,
        "csc": lambda t: 1 / math.sin(t), "sec": lambda t: 1 / math.cos(t),
        "cot": lambda t: math.cos(t) / math.sin(t),
        "sinh": math.sinh, "cosh": math.cosh, "tanh": math.tanh,
        "coth": lambda t: 1 / math.tanh(t), "atan": math.atan,
    }
    return table[func](u)


def _complex_apply(func: str, u: complex) -> complex:
    if func == "acot":
        return cmath.atan(1 / u)
    if func == "asec":
        return cmath.acos(1 / u)
    if func == "acsc":
        return cmath.asin(1 / u)
    if func == "ln":
        return cmath.log(u)
    table: dict[str, Callable[[complex], complex]] = {
        "exp": cmath.exp, "sin": cmath.sin, "cos": cmath.cos, "tan": cmath.tan,
        "csc": lambda t: 1 / cmath.sin(t), "sec": lambda t: 1 / cmath.cos(t),
        "cot": lambda t: cmath.cos(t) / cmath.sin(t),
        "sinh": cmath.sinh, "cosh": cmath.cosh, "tanh": cmath.tanh,
        "coth": lambda t: cmath.cosh(t) / cmath.sinh(t),
        "asin": cmath.asin, "acos": cmath.acos, "atan": cmath.atan,
    }
    return table[func](u)


def _check_domain(func: str, u: complex) -> None:
    if func in ("tan", "sec") and _near_pole(u, math.pi / 2):
        raise DomainError(f"{func} has a pole at {u}")
    if func in ("cot", "csc") and _near_pole(u, 0.0):
        raise DomainError(f"{func} has a pole at {u}")
    if func == "coth" and _near_pole(complex(u.imag, u.real), 0.0):
        raise DomainError(f"coth has a pole at {u}")
    if func in ("ln", "asec", "acsc") and u == 0:
        raise DomainError(f"{func}(0) is undefined")


def evaluate(e: Expr, x: complex = 0.0, tau_value: Optional[float] = None,
             real_only: bool = False) -> complex:
    """Numeric value of ``e`` at ``x``.

    Subexpressions that are real at real inputs are computed with real
    arithmetic, so their imaginary part is exactly zero. With ``real_only``
    any excursion into complex values raises :class:`DomainError`.
    """
    x = complex(x)
    if real_only and x.imag != 0:
        raise DomainError("complex argument in real-only mode")

    def ev(n: Expr) -> complex:
        if isinstance(n, Const):
            return complex(float(n.value))
        if isinstance(n, Var):
            return x
        if isinstance(n, Tau):
            if tau_value is None:
                raise MissingTau("tau appears but no tau_value was supplied")
            return complex(float(tau_value))
        if isinstance(n, NamedConst):
            if n.name == "i":
                if real_only:
                    raise DomainError("imaginary unit in real-only mode")
                return 1j
            return complex(math.e if n.name == "e" else math.pi)
        if isinstance(n, Apply):
            u = ev(n.arg)
            _check_domain(n.func, u)
            if u.imag == 0:
                v = _real_apply(n.func, u.real)
                if v is not None:
                    return complex(v, 0.0)
            if real_only:
                raise DomainError(f"{n.func}({u.real}) is not real")
            return _complex_apply(n.func, u)
        if isinstance(n, Pow):
            b = ev(n.base)
            if b == 0 and n.exponent < 0:
                raise DomainError("division by zero")
            if b.imag == 0:
                return complex(b.real**n.exponent, 0.0)
            return b**n.exponent
        a, b = ev(n.left), ev(n.right)
        real = a.imag == 0 and b.imag == 0
        if isinstance(n, Add):
            return complex(a.real + b.real, 0.0) if real else a + b
        if isinstance(n, Sub):
            return complex(a.real - b.real, 0.0) if real else a - b
        if isinstance(n, Mul):
            return complex(a.real * b.real, 0.0) if real else a * b
        if b == 0:
            raise DomainError("division by zero")
        return complex(a.real / b.real, 0.0) if real else a / b

    try:
        return ev(e)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        if isinstance(exc, ExprError):
            raise
        raise DomainError(str(exc)) from exc


# ---------------------------------------------------------------- vectorized evaluation

_NP_FUNCS: dict[str, Callable] = {
    "exp": np.exp, "ln": np.log, "sin": np.sin, "cos": np.cos, "tan": np.tan,
    "csc": lambda t: 1 / np.sin(t), "sec": lambda t: 1 / np.cos(t),
    "cot": lambda t: np.cos(t) / np.sin(t),
    "sinh": np.sinh, "cosh": np.cosh, "tanh": np.tanh,
    "coth": lambda t: np.cosh(t) / np.sinh(t),
    "asin": np.arcsin, "acos": np.arccos, "atan": np.arctan,
    "acot": lambda t: np.arctan(1 / t), "asec": lambda t: np.arccos(1 / t),
    "acsc": lambda t: np.arcsin(1 / t),
}


def compile_numpy(e: Expr, tau_value: Optional[float] = None) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorized complex evaluator for ``e``; no pole or domain checks.

    Values at singular points come back as inf/nan.
    """
    if tau_value is None and _contains(e, Tau):
        raise MissingTau("tau appears but no tau_value was supplied")

    def build(n: Expr) -> Callable[[np.ndarray], np.ndarray]:
        if isinstance(n, Const):
            c = complex(float(n.value))
            return lambda z: np.full_like(z, c)
        if isinstance(n, Var):
            return lambda z: z
        if isinstance(n, Tau):
            t = complex(tau_value)
            return lambda z: np.full_like(z, t)
        if isinstance(n, NamedConst):
            c = {"e": math.e, "pi": math.pi, "i": 1j}[n.name]
            return lambda z: np.full_like(z, c)
        if isinstance(n, Apply):
            f, g = _NP_FUNCS[n.func], build(n.arg)
            return lambda z: f(g(z))
        if isinstance(n, Pow):
            g, k = build(n.base), n.exponent
            return lambda z: g(z) ** k
        f, g = build(n.left), build(n.right)
        if isinstance(n, Add):
            return lambda z: f(z) + g(z)
        if isinstance(n, Sub):
            return lambda z: f(z) - g(z)
        if isinstance(n, Mul):
            return lambda z: f(z) * g(z)
        return lambda z: f(z) / g(z)

    inner = build(e)

    def fn(z):
        arr = np.asarray(z, dtype=complex)
        with np.errstate(all="ignore"):
            return inner(arr)

    return fn


def _contains(e: Expr, kind: type) -> bool:
    if isinstance(e, kind):
        return True
    if isinstance(e, (Add, Sub, Mul, Div)):
        return _contains(e.left, kind) or _contains(e.right, kind)
    if isinstance(e, Pow):
        return _contains(e.base, kind)
    if isinstance(e, Apply):
        return _contains(e.arg, kind)
    return False


def contains_var(e: Expr) -> bool:
    return _contains(e, Var)


def contains_tau(e: Expr) -> bool:
    return _contains(e, Tau)


def substitute(e: Expr, value: Expr) -> Expr:
    """Replace every ``x`` in ``e`` by ``value``."""
    if isinstance(e, Var):
        return value
    if isinstance(e, (Add, Sub, Mul, Div)):
        return type(e)(substitute(e.left, value), substitute(e.right, value))
    if isinstance(e, Pow):
        return Pow(substitute(e.base, value), e.exponent)
    if isinstance(e, Apply):
        return Apply(e.func, substitute(e.arg, value))
    return e
