"""Machine-checkable covering certificates and their JSON form."""
from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .gf import FieldSpec
from .hamming import Vec3

KINDS = ("ExplicitCover", "MetodoWitness", "CountingLowerBound", "ExhaustiveLowerBound")

_OPS = {"<": operator.lt, "<=": operator.le, "==": operator.eq, ">=": operator.ge, ">": operator.gt}


def inequality(claim: str, lhs: int, op: str, rhs: int, **extra) -> dict:
    """An evidence step ``lhs op rhs`` that records whether it holds."""
    step = {"claim": claim, "lhs": lhs, "op": op, "rhs": rhs, "holds": _OPS[op](lhs, rhs)}
    step.update(extra)
    return step


def recheck(step: dict) -> bool:
    """Re-evaluate an inequality step from its numbers, ignoring the recorded verdict."""
    terms = step.get("terms")
    if terms is not None and sum(terms) != step["lhs"]:
        return False
    return _OPS[step["op"]](step["lhs"], step["rhs"])


@dataclass
class CoveringCertificate:
    kind: str
    field: FieldSpec
    m: int
    vectors: list[Vec3] = field(default_factory=list)
    evidence: list[dict] = field(default_factory=list)
    verified: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    @property
    def q(self) -> int:
        return self.field.q

    def check(self) -> bool:
        """Independently re-validate the certificate."""
        if self.kind in ("ExplicitCover", "MetodoWitness"):
            from .covering import is_short_covering

            return bool(self.vectors) and is_short_covering(self.vectors).is_cover
        if self.kind == "CountingLowerBound":
            # steps marked "refined" were superseded by a finer case split
            return bool(self.evidence) and all(
                recheck(s) == s["holds"] and (s["holds"] or s.get("refined"))
                for s in self.evidence
            )
        return self.verified

    def to_json(self) -> dict:
        out = {"kind": self.kind, "q": self.q, "m": self.m}
        if self.vectors:
            out["vectors"] = [str(v) for v in self.vectors]
        out["evidence"] = self.evidence
        out["verified"] = self.verified
        return out
