import math
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from transcend.certificate import ALGEBRAIC, TRANSCENDENTAL, well_formed
from transcend.expr import evaluate
from transcend.laurent import (
    GradedComponent, LaurentPoly, NegativeSupport, classify_element, dense_approx, dim,
    format_laurent, from_laurent_polynomial, from_polynomial, grade_decompose, laurent_poly_mul,
    lp_add, lp_mul, membership, poly_add, poly_mul, reassemble, same_class, scalar_mul,
    to_laurent_polynomial, to_polynomial,
)

T = LaurentPoly.monomial
P = LaurentPoly.parse


def test_addition_examples():
    assert lp_add(P("2*tau + 1/2"), P("-2*tau + 1/2")) == 1
    assert lp_add(T(-1), T(-1)) == T(-1, 2)
    p = P("3*tau^2 - tau^-1")
    assert lp_add(p, LaurentPoly()) == p


def test_multiplication_examples():
    assert lp_mul(P("tau + tau^-1"), P("tau - tau^-1")) == P("tau^2 - tau^-2")
    assert lp_mul(T(1, 3), T(-1, Fraction(1, 3))) == 1
    assert lp_mul(T(2), T(-2)) == 1


def test_scalar_examples():
    assert scalar_mul(Fraction(2, 3), P("3*tau - 6")) == P("2*tau - 4")
    assert scalar_mul(0, P("tau")).is_zero()
    assert scalar_mul(1, P("tau^3 + 1")) == P("tau^3 + 1")


def test_membership_and_dimension():
    p = P("3*tau^2 - tau^-1")
    assert membership(p, 2, 1) and not membership(p, 1, 1)
    assert not any(membership(LaurentPoly.constant(1), n, m, starred=True) for n in range(4) for m in range(4))
    assert dim(2, 3) == 6


def test_grade_examples():
    comps = grade_decompose(P("tau^3 - tau + tau^-1 - tau^-3"))
    assert [(c.level, c.part) for c in comps] == [(3, P("tau^3 - tau^-3")), (1, P("-tau + tau^-1"))]
    assert [(c.level, c.part) for c in grade_decompose(LaurentPoly.constant(5))] == [(0, 5)]
    prod = lp_mul(P("tau^2 + tau^-2"), P("tau - tau^-1"))
    assert {c.level for c in grade_decompose(prod)} == {3, 1}


def test_graded_component_rejects_foreign_support():
    with pytest.raises(ValueError):
        GradedComponent(2, P("tau^2 + tau"))


def test_classify_element_examples():
    c = classify_element(P("3*tau^2 - tau^-1"))
    assert c.status is TRANSCENDENTAL and c.rule == "P3" and well_formed(c)
    assert classify_element(LaurentPoly.constant(Fraction(5, 7))).status is ALGEBRAIC
    assert classify_element(LaurentPoly()).status is ALGEBRAIC


def test_same_class_examples():
    assert same_class(P("tau + 1/2"), P("tau - 3"))
    assert not same_class(T(2), T(1))
    p = P("tau^4 - 2")
    assert same_class(p, p)


def test_text_form():
    assert format_laurent(P("3*tau^2 - tau^-1 + 1/2")) == "3*tau^2 + 1/2 - 1*tau^-1"
    assert str(LaurentPoly()) == "0"
    assert P(str(P("tau^5 - 2/3*tau^-4"))) == P("tau^5 - 2/3*tau^-4")


def test_parse_rejects_other_symbols():
    with pytest.raises(ValueError):
        P("tau + x")
    with pytest.raises(ValueError):
        P("sin(tau)")


def _decimal_oracle(target, eps, tau_value):
    """Smallest d such that rounding target - tau_value to d decimals is within eps."""
    with localcontext() as ctx:
        ctx.prec = 60
        diff = Decimal(target) - Decimal(tau_value)
        for d in range(40):
            q = diff.quantize(Decimal(1).scaleb(-d))
            if abs(diff - q) < Decimal(eps):
                return Fraction(q)


@pytest.mark.parametrize("target,eps,tau_value", [
    (3.0, 1e-3, math.e), (0.0, 1e-2, math.pi), (-7.25, 1e-6, math.e), (1.0, 0.5, math.pi),
])
def test_dense_approx_matches_decimal_oracle(target, eps, tau_value):
    r = dense_approx(target, eps, tau_value)
    assert r == lp_add(T(1), LaurentPoly.constant(_decimal_oracle(target, eps, tau_value)))
    assert abs(r.evaluate(tau_value) - target) < eps


def test_dense_approx_examples():
    assert dense_approx(3, 1e-3, math.e) == P("tau + 141/500")
    assert dense_approx(0, 1e-2, math.pi) == P("tau - 157/50")
    assert dense_approx(math.e, 1e-9, math.e) == T(1)


def test_polynomial_isomorphism_examples():
    assert to_polynomial(P("tau^2 + 1/2")) == [Fraction(1, 2), 0, 1]
    assert from_polynomial([Fraction(1, 2), 0, 1]) == P("tau^2 + 1/2")
    p = P("tau^3 - tau^-2")
    assert from_laurent_polynomial(*to_laurent_polynomial(p)) == p
    with pytest.raises(NegativeSupport):
        to_polynomial(p)


# ---------------------------------------------------------------- properties

coeffs = st.fractions(min_value=-100, max_value=100, max_denominator=100)
laurent = st.dictionaries(st.integers(-6, 6), coeffs, max_size=6).map(LaurentPoly)
nonzero = laurent.filter(lambda p: not p.is_zero())
scalars = st.fractions(min_value=-50, max_value=50, max_denominator=50)


@settings(max_examples=150, deadline=None)
@given(laurent, laurent, laurent)
def test_ring_axioms(p, q, r):
    assert lp_add(p, q) == lp_add(q, p)
    assert lp_mul(p, q) == lp_mul(q, p)
    assert lp_add(lp_add(p, q), r) == lp_add(p, lp_add(q, r))
    assert lp_mul(lp_mul(p, q), r) == lp_mul(p, lp_mul(q, r))
    assert lp_mul(p, lp_add(q, r)) == lp_add(lp_mul(p, q), lp_mul(p, r))
    assert lp_add(p, -p).is_zero()
    assert lp_mul(p, LaurentPoly.constant(1)) == p


@settings(max_examples=150, deadline=None)
@given(scalars, scalars, laurent, laurent)
def test_module_axioms(c, d, p, q):
    assert scalar_mul(c, lp_add(p, q)) == lp_add(scalar_mul(c, p), scalar_mul(c, q))
    assert scalar_mul(c + d, p) == lp_add(scalar_mul(c, p), scalar_mul(d, p))
    assert scalar_mul(c * d, p) == scalar_mul(c, scalar_mul(d, p))


@settings(max_examples=150, deadline=None)
@given(nonzero, nonzero)
def test_no_zero_divisors(p, q):
    assert not lp_mul(p, q).is_zero()


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), coeffs, coeffs, coeffs, coeffs)
def test_semi_graded_product(j, k, a, b, c, d):
    x = LaurentPoly({j: a, -j: b})
    y = LaurentPoly({k: c, -k: d})
    levels = {comp.level for comp in grade_decompose(lp_mul(x, y))}
    assert levels <= {j + k, abs(j - k)}


@settings(max_examples=150, deadline=None)
@given(laurent)
def test_grading_reassembles(p):
    comps = grade_decompose(p)
    assert reassemble(comps) == p
    levels = [c.level for c in comps]
    assert len(set(levels)) == len(levels)


@settings(max_examples=150, deadline=None)
@given(laurent, laurent, laurent)
def test_equivalence_relation(p, q, r):
    assert same_class(p, p)
    assert same_class(p, q) == same_class(q, p)
    q2, r2 = lp_add(p, LaurentPoly.constant(3)), lp_add(p, LaurentPoly.constant(-5))
    assert same_class(p, q2) and same_class(q2, r2) and same_class(p, r2)
    if same_class(p, q) and same_class(q, r):
        assert same_class(p, r)


@settings(max_examples=100, deadline=None)
@given(laurent, st.integers(0, 6), st.integers(0, 6), st.integers(0, 3), st.integers(0, 3))
def test_membership_is_monotone(p, n, m, dn, dm):
    if membership(p, n, m):
        assert membership(p, n + dn, m + dm)


@pytest.mark.parametrize("i,j", [(i, j) for j in range(1, 9) for i in range(1, j)])
def test_distinct_powers_are_in_distinct_classes(i, j):
    assert not same_class(T(i), T(j))
    assert classify_element(lp_add(T(i), -T(j))).status is TRANSCENDENTAL


@settings(max_examples=100, deadline=None)
@given(laurent)
def test_expression_image_matches_horner(p):
    direct = p.evaluate(math.pi)
    via_expr = evaluate(p.to_expr(), tau_value=math.pi).real
    assert math.isclose(direct, via_expr, rel_tol=1e-12, abs_tol=1e-12 * max(1, abs(direct)))


polys = st.lists(coeffs, max_size=6)


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_isomorphism_with_polynomials(a, b):
    p, q = from_polynomial(a), from_polynomial(b)
    assert from_polynomial(to_polynomial(p)) == p
    assert to_polynomial(lp_add(p, q)) == poly_add(to_polynomial(p), to_polynomial(q))
    assert to_polynomial(lp_mul(p, q)) == poly_mul(to_polynomial(p), to_polynomial(q))


@settings(max_examples=150, deadline=None)
@given(laurent, laurent)
def test_isomorphism_with_laurent_polynomials(p, q):
    assert from_laurent_polynomial(*to_laurent_polynomial(p)) == p
    img = laurent_poly_mul(to_laurent_polynomial(p), to_laurent_polynomial(q))
    assert from_laurent_polynomial(*img) == lp_mul(p, q)
