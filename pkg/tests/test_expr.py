import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from transcend.expr import (
    Apply, Const, DivisionByZero, DomainError, Equation, MissingTau, Mul, ParseError, Pow,
    UnknownFunction, X, compile_numpy, differentiate, evaluate, parse, parse_equation,
    simplify_constants, to_text,
)


def test_precedence_power_binds_tighter_than_unary_minus():
    assert parse("-x^2") == Mul(Const(-1), Pow(X, 2))
    assert evaluate(parse("-2^2")) == -4


def test_power_is_right_associative():
    assert parse("x^2^3") == parse("x^8")


def test_non_integer_exponent_becomes_exponential():
    e = parse("pi^x")
    assert isinstance(e, Apply) and e.func == "exp"
    assert abs(evaluate(e, 2.0) - math.pi**2) < 1e-12
    assert parse("e^x") == Apply("exp", X)


def test_equation_and_aliases():
    eq = parse("arcsin(x) = x")
    assert isinstance(eq, Equation)
    assert eq.lhs == Apply("asin", X)


def test_decimal_literals_are_exact():
    assert parse("0.1") == Const(Fraction(1, 10))


@pytest.mark.parametrize("text,pos", [("x +", 3), ("sin x", 4), ("x = = 1", 4), ("(x", 2), ("x $ 1", 2)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_unknown_function():
    with pytest.raises(UnknownFunction):
        parse("foo(x)")


def test_no_implicit_multiplication():
    with pytest.raises(ParseError):
        parse("2x")


def test_parse_equation_rejects_plain_expression():
    with pytest.raises(ParseError):
        parse_equation("x + 1")


def test_to_text_examples():
    assert to_text(parse("(x + 1)*(x - 1)")) == "(x + 1)*(x - 1)"
    assert to_text(parse("x - (x - 1)")) == "x - (x - 1)"
    assert to_text(parse("(-x)^2")) == "((-1)*x)^2"
    assert to_text(parse("5/6*x")) == "5/6*x"


@pytest.mark.parametrize("text", [
    "e^x + x - 12", "x*exp(x) + x - 12", "(sin(x))^2 + 2*sin(x) - 3", "x^-2 + tau^-1",
    "acot(x/2) - cosh(x)^3", "pi^x + 4*x", "2 - (3 - x)", "x/(x/2)", "-(x + 1)^2", "1/2 + 0.25*x",
])
def test_round_trip(text):
    tree = parse(text)
    assert parse(to_text(tree)) == tree


def test_simplify_constants_folds_exactly():
    assert simplify_constants(parse("1/3 + 1/6")) == Const(Fraction(1, 2))
    assert simplify_constants(parse("0*sin(x) + x^1")) == X
    assert simplify_constants(parse("exp(0) + ln(1)")) == Const(1)
    with pytest.raises(DivisionByZero):
        simplify_constants(parse("x/(2 - 2)"))


@pytest.mark.parametrize("text,deriv", [
    ("e^x + x - 12", "exp(x) + 1"),
    ("tan(x)", "1 + tan(x)^2"),
    ("x^3", "3*x^2"),
])
def test_derivative_text(text, deriv):
    assert to_text(differentiate(parse(text))) == deriv


FUNCS = ["exp", "ln", "sin", "cos", "tan", "cot", "sec", "csc", "sinh", "cosh", "tanh", "coth",
         "asin", "acos", "atan", "acot", "asec", "acsc"]


@pytest.mark.parametrize("func", FUNCS)
def test_derivatives_match_central_differences(func):
    # keep the argument inside the real domain: (1/2, 1) or (3/2, 2)
    shift = "3/2" if func in ("asec", "acsc", "acot", "coth") else "1/2"
    e = parse(f"{func}(x^2/3 + {shift})")
    d = differentiate(e)
    for x0 in (0.37, 0.61, 1.13):
        h = 1e-6
        fd = (evaluate(e, x0 + h) - evaluate(e, x0 - h)) / (2 * h)
        assert abs(evaluate(d, x0) - fd) < 1e-5 * max(1, abs(fd))


def test_evaluate_is_real_for_real_inputs():
    v = evaluate(parse("e^x + x - 12"), 2.27472787147)
    assert v.imag == 0 and abs(v) < 1e-9


def test_evaluate_domain_errors():
    with pytest.raises(DomainError):
        evaluate(parse("tan(x)"), math.pi / 2)
    with pytest.raises(DomainError):
        evaluate(parse("ln(x)"), 0.0)
    with pytest.raises(DomainError):
        evaluate(parse("csc(x)"), 0.0)
    with pytest.raises(DomainError):
        evaluate(parse("ln(x)"), -1.0, real_only=True)
    assert abs(evaluate(parse("ln(x)"), -1.0) - 1j * math.pi) < 1e-15


def test_missing_tau():
    with pytest.raises(MissingTau):
        evaluate(parse("tau + 1"))
    with pytest.raises(MissingTau):
        compile_numpy(parse("tau"))
    assert evaluate(parse("tau^2"), tau_value=3.0) == 9


@pytest.mark.parametrize("func", FUNCS)
def test_vectorized_evaluator_agrees_with_scalar(func):
    e = parse(f"{func}(x/3 + 2) * x - 1")
    f = compile_numpy(e)
    zs = np.array([0.3 + 0.2j, -1.1 + 0.7j, 2.5 - 0.4j])
    for z, v in zip(zs, f(zs)):
        assert abs(v - evaluate(e, complex(z))) < 1e-10 * max(1, abs(v))


_atoms = st.sampled_from(["x", "2", "1/3", "e", "pi"])


@st.composite
def _texts(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return draw(_atoms)
    kind = draw(st.sampled_from(["+", "-", "*", "/", "^", "f"]))
    if kind == "f":
        return f"{draw(st.sampled_from(['sin', 'exp', 'atan', 'cosh']))}({draw(_texts(depth - 1))})"
    if kind == "^":
        return f"({draw(_texts(depth - 1))})^{draw(st.integers(0, 3))}"
    return f"({draw(_texts(depth - 1))}) {kind} ({draw(_texts(depth - 1))})"


@settings(max_examples=200, deadline=None)
@given(_texts())
def test_printed_text_reparses_to_the_same_tree(text):
    tree = parse(text)
    assert parse(to_text(tree)) == tree


@settings(max_examples=200, deadline=None)
@given(_texts())
def test_simplification_preserves_value(text):
    tree = parse(text)
    try:
        before = evaluate(tree, 0.7)
    except (DomainError, ZeroDivisionError):
        return
    after = evaluate(simplify_constants(tree), 0.7)
    assert cmath.isclose(before, after, rel_tol=1e-9, abs_tol=1e-9)
