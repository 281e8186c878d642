"""Check reports: one record per verified identity, exact witnesses on failure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional


@dataclass
class AxiomCheck:
    """Outcome of a single identity check.

    ``witness`` holds the exact difference (tensor or element) when the check
    fails; ``element`` names the offending basis element for checks that are
    quantified over the basis.
    """

    axiom: str
    passed: bool
    witness: Any = None
    element: Optional[str] = None
    seconds: float = 0.0

    def as_dict(self) -> dict:
        # timing is excluded: serialized reports must be byte-identical
        # across runs on the same input
        d = {"id": self.axiom, "passed": self.passed}
        if self.element is not None:
            d["element"] = self.element
        if not self.passed and self.witness is not None:
            d["witness"] = str(self.witness)
        return d


@dataclass
class AxiomReport:
    subject: str
    checks: List[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: AxiomCheck) -> None:
        self.checks.append(check)

    def extend(self, other: "AxiomReport") -> None:
        self.checks.extend(other.checks)

    def find(self, axiom: str) -> Optional[AxiomCheck]:
        return next((c for c in self.checks if c.axiom == axiom), None)

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def summary(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            at = f" @ {c.element}" if c.element else ""
            lines.append(f"  [{mark}] {c.axiom}{at}")
        return "\n".join(lines)
