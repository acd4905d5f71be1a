"""Command-line entry point: ``transcend classify | solve | batch | algebra``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from .certificate import ALGEBRAIC, TRANSCENDENTAL, UNKNOWN, Certificate, Status, format_number
from .certify import classify, classify_equation
from .expr import Equation, ExprError, ParseError, contains_tau, evaluate, parse, parse_equation
from .laurent import (
    LaurentPoly, classify_element, dense_approx, grade_decompose, lp_add, lp_mul, same_class,
)
from .roots import (
    DEFAULT_DEPTH, DEFAULT_STEP, DEFAULT_TOL, Interval, Region, RootError, min_modulus_zero,
    solve_complex_all, solve_real_all,
)

SCHEMA = "1"
EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN, EXIT_NO_ROOTS = 0, 1, 2, 3
EXCEPTION_MATCH = 1e-9


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = DEFAULT_TOL
    scan_step: float = DEFAULT_STEP
    max_subdivision_depth: int = DEFAULT_DEPTH
    output_mode: str = "text"
    tau_value: Optional[float] = None

    def __post_init__(self):
        if not (self.tolerance > 0 and self.scan_step > 0):
            raise UsageError("--tol and --step must be positive")
        if self.max_subdivision_depth < 1:
            raise UsageError("--depth must be at least 1")

    @property
    def structured(self) -> bool:
        return self.output_mode == "structured"


def num(v: float) -> float:
    """Round to the 12 significant digits used in every report."""
    return float(f"{v:.12g}")


def cnum(z: complex) -> dict:
    return {"re": num(z.real), "im": num(z.imag)}


def emit(cfg: RunConfig, doc: dict, lines: List[str]) -> None:
    if cfg.structured:
        print(json.dumps({"schema": SCHEMA, **doc}, indent=2))
    else:
        print("\n".join(lines))


def report_error(message: str, text: str = "", position: Optional[int] = None) -> None:
    print(f"error: {message}", file=sys.stderr)
    if text and position is not None:
        print(f"  {text}\n  {' ' * position}^", file=sys.stderr)


# ---------------------------------------------------------------- classify


def _numeric_value(parsed, cfg: RunConfig) -> Optional[complex]:
    if isinstance(parsed, Equation) or (contains_tau(parsed) and cfg.tau_value is None):
        return None
    try:
        return evaluate(parsed, tau_value=cfg.tau_value)
    except ExprError:
        return None


def run_classify(text: str, cfg: RunConfig) -> int:
    parsed = parse(text)
    cert = classify(text)
    value = _numeric_value(parsed, cfg)
    doc = {"command": "classify", "input": text, "certificate": cert.to_dict()}
    lines = [f"input: {text}", f"status: {cert.status.value}", f"rule: {cert.rule}"]
    if value is not None:
        doc["value"] = cnum(value)
        lines.append(f"value: {format_number(value if value.imag else value.real)}")
    if cert.exceptions:
        roots = ", ".join(format_number(e.root) for e in cert.exceptions)
        lines.append(f"exceptions: {roots}")
    lines += ["certificate:", cert.render(1)]
    emit(cfg, doc, lines)
    return EXIT_UNKNOWN if cert.status is UNKNOWN else EXIT_OK


# ---------------------------------------------------------------- solve


def root_status(cert: Certificate, z: complex) -> Status:
    for e in cert.exceptions:
        if abs(z - complex(e.root)) < EXCEPTION_MATCH:
            return e.status
    return cert.status


def run_solve(text: str, mode: str, bounds: List[float], cfg: RunConfig) -> int:
    eq = parse_equation(text)
    cert = classify_equation(eq)
    errors = []
    if mode == "real":
        roots, failures = solve_real_all(eq, Interval(*bounds), cfg.scan_step, cfg.tolerance)
        errors = [{"where": b.to_dict(), "message": msg} for b, msg in failures]
    else:
        try:
            if mode == "complex":
                roots = solve_complex_all(eq, Region(*bounds), cfg.tolerance, cfg.max_subdivision_depth)
            else:
                best = min_modulus_zero(eq, bounds[0], cfg.tolerance, cfg.max_subdivision_depth)
                roots = [best] if best is not None else []
        except RootError as exc:
            roots, errors = [], [{"where": bounds, "message": str(exc)}]

    lines = [f"equation: {eq}", f"certificate: {cert.status.value} ({cert.rule})"]
    out = []
    for k, r in enumerate(roots, 1):
        z = complex(r.value)
        status = root_status(cert, z)
        item = {"value": cnum(z), "residual": num(r.residual), "status": status.value}
        if mode == "real":
            item["bracket"] = {key: num(v) for key, v in r.bracket.to_dict().items()}
            where = f"bracket [{format_number(r.bracket.lo)}, {format_number(r.bracket.hi)}]"
            shown = format_number(z.real)
        else:
            item["region"] = {key: num(v) for key, v in r.region.to_dict().items()}
            item["multiplicity"] = r.multiplicity
            where = f"multiplicity {r.multiplicity}"
            shown = format_number(z)
        out.append(item)
        lines.append(f"root {k}: {shown}  residual {format_number(num(r.residual))}  {where}  "
                     f"status {status.value}")
    if not roots:
        lines.append("no roots found")
    for err in errors:
        lines.append(f"solver error at {err['where']}: {err['message']}")
    emit(cfg, {"command": "solve", "mode": mode, "equation": str(eq),
               "certificate": cert.to_dict(), "roots": out, "errors": errors}, lines)
    return EXIT_OK if roots else EXIT_NO_ROOTS


# ---------------------------------------------------------------- batch


def run_batch(path: str, cfg: RunConfig) -> int:
    with open(path, encoding="utf-8") as fh:
        inputs = [(n, line.strip()) for n, line in enumerate(fh, 1)]
    inputs = [(n, s) for n, s in inputs if s and not s.startswith("#")]
    counts = {s.value: 0 for s in (TRANSCENDENTAL, ALGEBRAIC, UNKNOWN)}
    counts["error"] = 0
    reports, lines = [], []
    for n, s in inputs:
        try:
            cert = classify(s)
        except (ExprError, ValueError) as exc:
            counts["error"] += 1
            reports.append({"line": n, "input": s, "error": str(exc)})
            lines.append(f"line {n}: {s} -> error: {exc}")
            continue
        counts[cert.status.value] += 1
        reports.append({"line": n, "input": s, "certificate": cert.to_dict()})
        excs = "".join(f", exception x = {format_number(e.root)}" for e in cert.exceptions)
        lines.append(f"line {n}: {s} -> {cert.status.value} ({cert.rule}){excs}")
    shown = [f"{v} {k}" for k, v in counts.items() if v] or [f"0 {k}" for k in counts if k != "error"]
    lines.append("summary: " + " / ".join(shown))
    emit(cfg, {"command": "batch", "file": path, "reports": reports, "summary": counts}, lines)
    return EXIT_ERROR if counts["error"] else EXIT_OK


# ---------------------------------------------------------------- algebra


def run_algebra(op: str, operands: List[str], cfg: RunConfig) -> int:
    arity = {"add": 2, "mul": 2, "grade": 1, "class": (1, 2), "dense": 2}[op]
    if len(operands) not in (arity if isinstance(arity, tuple) else (arity,)):
        raise UsageError(f"algebra {op} takes {arity} operand(s)")
    doc = {"command": "algebra", "op": op}
    if op in ("add", "mul"):
        p, q = (LaurentPoly.parse(s) for s in operands)
        r = lp_add(p, q) if op == "add" else lp_mul(p, q)
        doc["result"] = str(r)
        lines = [str(r)]
    elif op == "grade":
        comps = grade_decompose(LaurentPoly.parse(operands[0]))
        doc["components"] = [{"level": c.level, "part": str(c.part)} for c in comps]
        lines = [f"level {c.level}: {c.part}" for c in comps]
    elif op == "class":
        p = LaurentPoly.parse(operands[0])
        cert = classify_element(p)
        doc["certificate"] = cert.to_dict()
        lines = [f"status: {cert.status.value}", cert.render()]
        if len(operands) == 2:
            same = same_class(p, LaurentPoly.parse(operands[1]))
            doc["same_class"] = same
            lines.append(f"same class: {'true' if same else 'false'}")
    else:
        if cfg.tau_value is None:
            raise UsageError("algebra dense needs --tau-value")
        target, eps = float(operands[0]), float(operands[1])
        r = dense_approx(target, eps, cfg.tau_value)
        err = abs(r.evaluate(cfg.tau_value) - target)
        doc.update(result=str(r), error=num(err))
        lines = [str(r), f"error: {format_number(err)}"]
    emit(cfg, doc, lines)
    return EXIT_OK


# ---------------------------------------------------------------- argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    env_tol = os.environ.get("TRANSCEND_PRECISION")
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tol", type=float, default=d(float(env_tol) if env_tol else DEFAULT_TOL),
                   help="residual tolerance (default 1e-12, or $TRANSCEND_PRECISION)")
    p.add_argument("--step", type=float, default=d(DEFAULT_STEP), help="real scan step")
    p.add_argument("--depth", type=int, default=d(DEFAULT_DEPTH), help="maximum subdivision depth")
    p.add_argument("--json", action="store_true", default=d(False), help="structured output")
    p.add_argument("--tau-value", type=float, default=d(None), help="numeric value for tau")
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags(defaults=False)
    parser = _Parser(prog="transcend", parents=[_global_flags(defaults=True)],
                     description="Transcendence certificates and numeric roots for elementary equations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[flags], help="classify an equation or a number")
    p.add_argument("input")

    p = sub.add_parser("solve", parents=[flags], help="find real or complex roots")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--real", action="store_const", dest="mode", const="real")
    mode.add_argument("--complex", action="store_const", dest="mode", const="complex")
    mode.add_argument("--min-modulus", action="store_const", dest="mode", const="min-modulus")
    p.add_argument("--interval", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--rect", nargs=4, type=float, metavar=("RL", "RH", "IL", "IH"))
    p.add_argument("--radius", type=float, metavar="R")
    p.add_argument("equation")

    p = sub.add_parser("batch", parents=[flags], help="classify every line of a file")
    p.add_argument("file")

    p = sub.add_parser("algebra", parents=[flags], help="Laurent algebra demonstrations")
    p.add_argument("op", choices=["add", "mul", "grade", "class", "dense"])
    p.add_argument("operands", nargs="*")
    return parser


def _bounds(args) -> List[float]:
    need = {"real": ("interval", "--interval LO HI"), "complex": ("rect", "--rect RL RH IL IH"),
            "min-modulus": ("radius", "--radius R")}[args.mode]
    value = getattr(args, need[0])
    if value is None:
        raise UsageError(f"solve --{args.mode} needs {need[1]}")
    return [value] if args.mode == "min-modulus" else list(value)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    text = getattr(args, "input", None) or getattr(args, "equation", None) or ""
    try:
        cfg = RunConfig(args.tol, args.step, args.depth,
                        "structured" if args.json else "text", args.tau_value)
        if args.command == "classify":
            return run_classify(args.input, cfg)
        if args.command == "solve":
            return run_solve(args.equation, args.mode, _bounds(args), cfg)
        if args.command == "batch":
            return run_batch(args.file, cfg)
        return run_algebra(args.op, args.operands, cfg)
    except ParseError as exc:
        report_error(str(exc), text, exc.position)
    except (UsageError, ExprError, ValueError, OSError) as exc:
        report_error(str(exc))
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
