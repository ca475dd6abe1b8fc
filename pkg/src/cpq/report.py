"""Structured verification outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["PASS", "FAIL", "NOTED", "VerificationReport"]

PASS = "pass"
FAIL = "fail"
NOTED = "discrepancy-noted"


@dataclass
class VerificationReport:
    """Outcome of one checked statement.

    ``status`` is ``pass``, ``fail`` or ``discrepancy-noted``; the last never
    fails a run but is always listed.  ``details`` carries counterexamples or
    measured discrepancies for humans and is left out of the JSON record.
    """

    claim: str
    status: str
    exact: bool = True
    residual_zero: bool = True
    value: str = ""
    paper_expected: str = ""
    n: int | None = None
    kind: str | None = None
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "kind": self.kind,
            "exact": self.exact,
            "residual_zero": self.residual_zero,
            "value": self.value,
            "paper_expected": self.paper_expected,
            "status": self.status,
        }

    def line(self) -> str:
        out = f"[{self.status}] {self.claim}: residual_zero={'true' if self.residual_zero else 'false'}"
        if self.value:
            out += f" value={self.value}"
        if self.paper_expected and self.paper_expected != self.value:
            out += f" expected={self.paper_expected}"
        return out

    @classmethod
    def from_bool(cls, claim: str, ok: bool, **kw) -> "VerificationReport":
        return cls(claim, PASS if ok else FAIL, residual_zero=ok, **kw)
