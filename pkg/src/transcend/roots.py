"""Real and complex zeros of F(x) = lhs - rhs.

Real zeros are bracketed by a sign scan and refined by bisection followed by
Newton steps. Complex zeros are counted with the argument principle,

    N = (1 / 2 pi i) * contour integral of F'(z) / F(z) dz,

integrated edge by edge with composite 16-point Gauss-Legendre, and isolated
by recursive subdivision of the rectangle. A region holding one zero gives
a starting point through the first moment of F'/F, which Newton then polishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from .expr import (
    DomainError, Equation, Expr, Sub, compile_numpy, differentiate, evaluate,
    parse_equation, simplify_constants,
)

DEFAULT_TOL = 1e-12
DEFAULT_STEP = 0.1
DEFAULT_DEPTH = 40
NEWTON_CAP = 50
BISECT_WIDTH = 1e-3

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_EDGE_TOL = 1e-3 / 4        # per-edge change in the count between refinements
_MAX_SEGMENTS = 4096
_JITTERS = 5
_SPLIT_RATIOS = (0.5137, 0.4759, 0.4, 0.6, 0.3391, 0.6627)


class RootError(Exception):
    pass


class NoSignChange(RootError, ValueError):
    pass


class NonConvergence(RootError, ArithmeticError):
    pass


class BoundaryZero(RootError):
    """A zero sits on (or too close to) the region boundary."""


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class Region:
    re_lo: float
    re_hi: float
    im_lo: float
    im_hi: float

    def __post_init__(self):
        if not (self.re_lo < self.re_hi and self.im_lo < self.im_hi):
            raise ValueError(f"degenerate region {self}")

    def __contains__(self, z: complex) -> bool:
        return self.re_lo <= z.real <= self.re_hi and self.im_lo <= z.imag <= self.im_hi

    @property
    def diameter(self) -> float:
        return math.hypot(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def center(self) -> complex:
        return complex((self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2)

    def corners(self) -> Tuple[complex, complex, complex, complex]:
        """Counterclockwise from the lower-left corner."""
        return (complex(self.re_lo, self.im_lo), complex(self.re_hi, self.im_lo),
                complex(self.re_hi, self.im_hi), complex(self.re_lo, self.im_hi))

    def expanded(self, delta: float) -> "Region":
        return Region(self.re_lo - delta, self.re_hi + delta, self.im_lo - delta, self.im_hi + delta)

    def split(self, ratio: float = 0.5) -> Tuple["Region", "Region"]:
        """Cut across the longer side at ``ratio`` of its length."""
        if self.re_hi - self.re_lo >= self.im_hi - self.im_lo:
            cut = self.re_lo + ratio * (self.re_hi - self.re_lo)
            return (Region(self.re_lo, cut, self.im_lo, self.im_hi),
                    Region(cut, self.re_hi, self.im_lo, self.im_hi))
        cut = self.im_lo + ratio * (self.im_hi - self.im_lo)
        return (Region(self.re_lo, self.re_hi, self.im_lo, cut),
                Region(self.re_lo, self.re_hi, cut, self.im_hi))

    def to_dict(self) -> dict:
        return {"re_lo": self.re_lo, "re_hi": self.re_hi, "im_lo": self.im_lo, "im_hi": self.im_hi}


@dataclass(frozen=True)
class RootReal:
    value: float
    bracket: Interval
    residual: float

    def to_dict(self) -> dict:
        return {"value": {"re": self.value, "im": 0.0}, "residual": self.residual,
                "bracket": self.bracket.to_dict()}


@dataclass(frozen=True)
class RootComplex:
    value: complex
    residual: float
    region: Region
    multiplicity: int = 1

    def to_dict(self) -> dict:
        return {"value": {"re": self.value.real, "im": self.value.imag}, "residual": self.residual,
                "region": self.region.to_dict(), "multiplicity": self.multiplicity}


class ScanResult(list):
    """Brackets found by :func:`bracket_scan`; ``skipped`` lists the sub-intervals
    that could not be evaluated."""

    def __init__(self, brackets=(), skipped=()):
        super().__init__(brackets)
        self.skipped = list(skipped)


EquationLike = Union[Equation, str]


def residual_expr(eq: EquationLike) -> Expr:
    if isinstance(eq, str):
        eq = parse_equation(eq)
    return simplify_constants(Sub(eq.lhs, eq.rhs))


# ---------------------------------------------------------------- real zeros


def _real_fn(e: Expr) -> Callable[[float], float]:
    return lambda t: evaluate(e, t, real_only=True).real


def _safe(f, t) -> Optional[float]:
    try:
        v = f(t)
    except DomainError:
        return None
    return v if math.isfinite(v) else None


def bracket_scan(eq: EquationLike, domain: Interval, step: float = DEFAULT_STEP) -> ScanResult:
    """Sub-intervals of width at most ``step`` across which F changes sign."""
    if step <= 0:
        raise ValueError("step must be positive")
    f = _real_fn(residual_expr(eq))
    n = max(1, math.ceil(domain.width / step - 1e-9))
    grid = [domain.lo + k * step for k in range(n)] + [domain.hi]
    values = [_safe(f, t) for t in grid]
    brackets, skipped = [], []
    for k in range(n):
        a, b = grid[k], grid[k + 1]
        fa, fb = values[k], values[k + 1]
        if fa is None or fb is None:
            skipped.append(Interval(a, b))
            continue
        if fa * fb < 0:
            brackets.append(Interval(a, b))
        elif fb == 0 and k + 1 < n:
            # a zero on the grid: bracket it with a step-wide interval centred on it
            lo, hi = b - step / 2, b + step / 2
            flo, fhi = _safe(f, lo), _safe(f, hi)
            if flo is not None and fhi is not None and flo * fhi < 0:
                brackets.append(Interval(lo, hi))
    return ScanResult(brackets, skipped)


def solve_real(eq: EquationLike, bracket: Interval, tol: float = DEFAULT_TOL,
               max_iter: int = NEWTON_CAP) -> RootReal:
    """Hybrid bisection/Newton inside a sign-change bracket."""
    e = residual_expr(eq)
    f, df = _real_fn(e), _real_fn(differentiate(e))
    a, b = bracket.lo, bracket.hi
    fa, fb = f(a), f(b)
    for end, fend in ((a, fa), (b, fb)):
        if fend == 0:
            return RootReal(end, bracket, 0.0)
    if fa * fb > 0:
        raise NoSignChange(f"F({a}) and F({b}) have the same sign")

    while b - a > BISECT_WIDTH:
        m = (a + b) / 2
        try:
            fm = f(m)
        except DomainError as exc:
            raise NonConvergence(f"bisection reached a singular point: {exc}") from exc
        if fm == 0:
            return RootReal(m, bracket, 0.0)
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m

    x = (a + b) / 2
    for _ in range(max_iter):
        try:
            fx = f(x)
        except DomainError as exc:
            raise NonConvergence(f"iteration reached a singular point: {exc}") from exc
        if abs(fx) < tol:
            return RootReal(x, bracket, abs(fx))
        if (fx < 0) == (fa < 0):
            a, fa = x, fx
        else:
            b = x
        try:
            d = df(x)
            step = x - fx / d
        except (DomainError, ZeroDivisionError):
            step = math.nan
        # leave Newton for bisection whenever it escapes the bracket
        x = step if a < step < b else (a + b) / 2
    raise NonConvergence(f"no residual below {tol:g} after {max_iter} iterations (last x = {x!r})")


def solve_real_all(eq: EquationLike, domain: Interval, step: float = DEFAULT_STEP,
                   tol: float = DEFAULT_TOL) -> Tuple[List[RootReal], List[Tuple[Interval, str]]]:
    """Scan then solve each bracket; per-bracket failures are returned, not raised."""
    roots, failures = [], []
    scan = bracket_scan(eq, domain, step)
    for br in scan:
        try:
            roots.append(solve_real(eq, br, tol))
        except RootError as exc:
            failures.append((br, str(exc)))
    return roots, failures


# ---------------------------------------------------------------- argument principle


def _complex_fns(eq: EquationLike):
    e = residual_expr(eq)
    F = compile_numpy(e)
    dF = compile_numpy(differentiate(e))
    return F, dF


def _edge(integrand, a: complex, b: complex) -> Optional[complex]:
    """Adaptive composite Gauss-Legendre along the segment a -> b."""
    prev = None
    n = 2
    while n <= _MAX_SEGMENTS:
        h = (b - a) / n
        starts = a + h * np.arange(n)
        nodes = starts[:, None] + h * (_GL_NODES + 1) / 2
        vals = integrand(nodes)
        if not np.all(np.isfinite(vals)):
            return None
        total = np.sum(vals * _GL_WEIGHTS) * h / 2
        if prev is not None and abs(total - prev) / (2 * math.pi) < _EDGE_TOL:
            return total
        prev = total
        n *= 2
    return None


def _contour(integrand, region: Region) -> Optional[complex]:
    """(1 / 2 pi i) times the integral around the region, or None on failure."""
    c = region.corners()
    total = 0j
    for k in range(4):
        part = _edge(integrand, c[k], c[(k + 1) % 4])
        if part is None:
            return None
        total += part
    return total / (2j * math.pi)


def _count(ratio, region: Region, depth: int = 0) -> Optional[int]:
    val = _contour(ratio, region)
    if val is None:
        return None
    k = round(val.real)
    if abs(val - k) < 0.25:
        return k
    if depth >= 4:
        return None
    a, b = region.split()
    ca = _count(ratio, a, depth + 1)
    cb = _count(ratio, b, depth + 1) if ca is not None else None
    return None if cb is None else ca + cb


def _robust_count(ratio, region: Region) -> Tuple[int, Region]:
    reg = region
    for _ in range(_JITTERS + 1):
        n = _count(ratio, reg)
        if n is not None:
            return n, reg
        reg = reg.expanded(1e-4 * reg.diameter)
    raise BoundaryZero(f"could not integrate around {region} after {_JITTERS} jitters")


def winding_count(eq: EquationLike, region: Region) -> int:
    """Number of zeros of F inside ``region``, counted with multiplicity."""
    F, dF = _complex_fns(eq)
    n, _ = _robust_count(lambda z: dF(z) / F(z), region)
    return n


# ---------------------------------------------------------------- complex zeros


def _newton(F, dF, z0: complex, tol: float, max_iter: int = NEWTON_CAP) -> Optional[complex]:
    z = complex(z0)
    for _ in range(max_iter):
        fz = complex(F(np.array([z]))[0])
        if abs(fz) < tol:
            return z
        d = complex(dF(np.array([z]))[0])
        if d == 0 or not (np.isfinite(fz) and np.isfinite(d)):
            return None
        z = z - fz / d
        if not np.isfinite(z):
            return None
    return None


def solve_complex_all(eq: EquationLike, region: Region, tol: float = DEFAULT_TOL,
                      max_depth: int = DEFAULT_DEPTH) -> List[RootComplex]:
    """Every zero in ``region``, isolated and polished, sorted by (re, im)."""
    F, dF = _complex_fns(eq)

    def ratio(z):
        return dF(z) / F(z)

    def weighted(z):
        return z * dF(z) / F(z)

    def absF(z: complex) -> float:
        return float(abs(F(np.array([z]))[0]))

    found: List[RootComplex] = []

    def isolate(reg: Region, count: int, depth: int) -> None:
        if count <= 0:
            return
        if count == 1:
            z0 = _contour(weighted, reg)
            z = _newton(F, dF, z0, tol) if z0 is not None else None
            margin = 1e-6 * reg.diameter + 1e-12
            if z is not None and z in reg.expanded(margin):
                found.append(RootComplex(complex(z), absF(z), reg))
                return
            if reg.diameter < 1e-6 or depth >= max_depth:
                raise NonConvergence(f"Newton failed for the zero isolated in {reg}")
        elif reg.diameter < 1e-6 or depth >= max_depth:
            c = reg.center
            found.append(RootComplex(c, absF(c), reg, multiplicity=count))
            return
        for r in _SPLIT_RATIOS:
            a, b = reg.split(r)
            ca = _count(ratio, a)
            cb = _count(ratio, b) if ca is not None else None
            if cb is not None and ca + cb == count:
                isolate(a, ca, depth + 1)
                isolate(b, cb, depth + 1)
                return
        raise BoundaryZero(f"no split of {reg} keeps the zero count {count}")

    total, reg = _robust_count(ratio, region)
    isolate(reg, total, 0)
    return sorted(found, key=lambda r: (r.value.real, r.value.imag))


def min_modulus_zero(eq: EquationLike, radius: float, tol: float = DEFAULT_TOL,
                     max_depth: int = DEFAULT_DEPTH) -> Optional[RootComplex]:
    """Zero of least modulus in the disk ``|z| <= radius``.

    Ties go to the positive imaginary part, then to the smaller real part.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    square = Region(-radius, radius, -radius, radius)
    inside = [r for r in solve_complex_all(eq, square, tol, max_depth) if abs(r.value) <= radius]
    if not inside:
        return None
    least = min(abs(r.value) for r in inside)
    tied = [r for r in inside if abs(r.value) <= least * (1 + 1e-9) + 1e-12]
    return min(tied, key=lambda r: (r.value.imag <= 0, r.value.real))


# ---------------------------------------------------------------- algebraicity probe


def _grid(width: int, H: int, lead: bool) -> np.ndarray:
    """All coefficient tuples of length ``width`` in [-H, H]; the last one in
    [1, H] when ``lead`` (fixes the sign and the exact degree)."""
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    ranges = [range(-H, H + 1)] * width
    if lead:
        ranges[-1] = range(1, H + 1)
    return np.array(list(product(*ranges)), dtype=np.int64).reshape(-1, width)


def algebraicity_probe(value: Union[float, complex], max_deg: int, max_height: int,
                       tol: float = 1e-7) -> Optional[Tuple[int, ...]]:
    """Search exhaustively for an integer polynomial vanishing (to ``tol``) at ``value``.

    Returns coefficients low to high of the lowest-degree, then lowest-height
    primitive polynomial with positive leading coefficient, or None.
    Meet in the middle: low and high halves of the coefficient vector are
    enumerated separately and matched on the sorted real parts.
    """
    if not (1 <= max_deg <= 4 and 1 <= max_height <= 50):
        raise ValueError("probe bounds are degree <= 4 and height <= 50")
    z = complex(value)
    for d in range(1, max_deg + 1):
        powers = z ** np.arange(d + 1)
        split = (d + 1) // 2
        low = _grid(split, max_height, lead=False)
        high = _grid(d + 1 - split, max_height, lead=True)
        lv = low @ powers[:split] if split else np.zeros(1, dtype=complex)
        hv = high @ powers[split:]
        order = np.argsort(lv.real, kind="stable")
        lre = lv.real[order]
        starts = np.searchsorted(lre, -hv.real - tol, side="left")
        stops = np.searchsorted(lre, -hv.real + tol, side="right")
        counts = stops - starts
        if not counts.any():
            continue
        hi_idx = np.repeat(np.arange(len(hv)), counts)
        lo_idx = order[np.concatenate([np.arange(s, t) for s, t in zip(starts, stops) if t > s])]
        close = np.abs(lv[lo_idx] + hv[hi_idx]) < tol
        hits = [tuple(int(c) for c in np.concatenate([low[i], high[j]]))
                for i, j in zip(lo_idx[close], hi_idx[close])]
        hits = [h for h in hits if reduce(math.gcd, h) == 1]
        if hits:
            return min(hits, key=lambda h: (max(map(abs, h)), h))
    return None
