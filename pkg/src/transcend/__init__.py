"""Transcendence certificates for elementary equations, exact arithmetic in
Q[tau, 1/tau], and numeric root finding."""

from .certificate import (
    ALGEBRAIC, TRANSCENDENTAL, UNKNOWN, Certificate, ExceptionalRoot, Status, well_formed,
)
from .certify import (
    C1, P1, T1, T2, NoMatch, NumComplex, NumLaurent, UndefinedAtPoint, VariablePresent,
    axiom_lookup, classify, classify_equation, classify_number, exceptional_candidates,
    match_rule, rewrite_even_trig,
)
from .expr import (
    DivisionByZero, DomainError, Equation, Expr, MissingTau, ParseError, UnknownFunction,
    compile_numpy, differentiate, evaluate, parse, parse_equation, parse_expr,
    simplify_constants, to_text,
)
from .laurent import (
    GradedComponent, LaurentPoly, NegativeSupport, classify_element, dense_approx, dim,
    from_laurent_polynomial, from_polynomial, grade_decompose, lp_add, lp_mul, membership,
    same_class, scalar_mul, to_laurent_polynomial, to_polynomial,
)
from .roots import (
    BoundaryZero, Interval, NoSignChange, NonConvergence, Region, RootComplex, RootReal,
    algebraicity_probe, bracket_scan, min_modulus_zero, solve_complex_all, solve_real,
    winding_count,
)

__all__ = [
    "ALGEBRAIC", "TRANSCENDENTAL", "UNKNOWN", "Certificate", "ExceptionalRoot", "Status",
    "well_formed", "C1", "P1", "T1", "T2", "NoMatch", "NumComplex", "NumLaurent",
    "UndefinedAtPoint", "VariablePresent", "axiom_lookup", "classify", "classify_equation",
    "classify_number", "exceptional_candidates", "match_rule", "rewrite_even_trig",
    "DivisionByZero", "DomainError", "Equation", "Expr", "MissingTau", "ParseError",
    "UnknownFunction", "compile_numpy", "differentiate", "evaluate", "parse", "parse_equation",
    "parse_expr", "simplify_constants", "to_text", "GradedComponent", "LaurentPoly",
    "NegativeSupport", "classify_element", "dense_approx", "dim", "from_laurent_polynomial",
    "from_polynomial", "grade_decompose", "lp_add", "lp_mul", "membership", "same_class",
    "scalar_mul", "to_laurent_polynomial", "to_polynomial", "BoundaryZero", "Interval",
    "NoSignChange", "NonConvergence", "Region", "RootComplex", "RootReal",
    "algebraicity_probe", "bracket_scan", "min_modulus_zero", "solve_complex_all",
    "solve_real", "winding_count",
]
