"""Certificate trees and their JSON-compatible serialization."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Tuple, Union

Number = Union[Fraction, float, complex]


class Status(enum.Enum):
    TRANSCENDENTAL = "transcendental"
    ALGEBRAIC = "algebraic"
    UNKNOWN = "unknown"


TRANSCENDENTAL = Status.TRANSCENDENTAL
ALGEBRAIC = Status.ALGEBRAIC
UNKNOWN = Status.UNKNOWN

# rule identifiers allowed to justify a transcendental leaf
LEAF_RULES = ("axiom", "P3", "P5")


@dataclass(frozen=True)
class ExceptionalRoot:
    """A root the rule does not cover, with its own status.

    ``residual`` is exact (a Fraction) when the root was checked by exact
    substitution, a float when it was checked numerically.
    """

    root: Number
    status: Status
    residual: Number


@dataclass(frozen=True)
class Certificate:
    claim: str
    status: Status
    rule: str
    premises: Tuple["Certificate", ...] = ()
    exceptions: Tuple[ExceptionalRoot, ...] = ()

    def __post_init__(self):
        if self.rule == "axiom" and self.premises:
            raise ValueError("an axiom has no premises")
        if self.status is TRANSCENDENTAL and not self.rule:
            raise ValueError("a transcendental claim needs a rule")

    def walk(self) -> Iterator["Certificate"]:
        yield self
        for p in self.premises:
            yield from p.walk()

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status.value,
            "rule": self.rule,
            "premises": [p.to_dict() for p in self.premises],
            "exceptions": [
                {"root": encode_number(e.root), "status": e.status.value,
                 "residual": encode_number(e.residual)}
                for e in self.exceptions
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(
            claim=data["claim"],
            status=Status(data["status"]),
            rule=data["rule"],
            premises=tuple(cls.from_dict(p) for p in data["premises"]),
            exceptions=tuple(
                ExceptionalRoot(decode_number(e["root"]), Status(e["status"]),
                                decode_number(e["residual"]))
                for e in data["exceptions"]
            ),
        )

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}[{self.status.value}] ({self.rule}) {self.claim}"]
        for e in self.exceptions:
            lines.append(f"{pad}  exception: x = {format_number(e.root)} "
                         f"[{e.status.value}] residual {format_number(e.residual)}")
        for p in self.premises:
            lines.append(p.render(indent + 1))
        return "\n".join(lines)


def well_formed(cert: Certificate) -> bool:
    """Transcendental leaves cite an axiom or a P3/P5 rule; axioms are leaves."""
    for node in cert.walk():
        if node.rule == "axiom" and node.premises:
            return False
        if node.status is TRANSCENDENTAL and not node.premises and node.rule not in LEAF_RULES:
            return False
    return True


def encode_number(v: Number) -> Any:
    """Exact rationals become ``"p/q"`` strings; complex values ``{"re", "im"}``."""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return f"{v}/1"
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return float(v)


def decode_number(v: Any) -> Number:
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, dict):
        return complex(v["re"], v["im"])
    return float(v)


def format_number(v: Number) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return f"{v.real:.12g}{v.imag:+.12g}i"
    return f"{v:.12g}"
