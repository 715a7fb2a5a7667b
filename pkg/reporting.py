"""
Verification reports shared by the identity checks and the numeric oracle.

A failed identity is recorded, never raised, so one run lists every mismatch.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

REL_FLOOR = 1e-300


def relative_error(a: float, b: float) -> float:
    """|a - b| / max(|a|, |b|, 1e-300)."""
    return abs(a - b) / max(abs(a), abs(b), REL_FLOOR)


@dataclass
class CheckCase:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail if not self.passed else ""}


@dataclass
class CheckReport:
    """Exact checks: each case either holds or carries a short explanation."""

    title: str
    cases: List[CheckCase] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.cases.append(CheckCase(name, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "CheckReport", prefix: str = ""):
        for case in other.cases:
            self.cases.append(CheckCase(prefix + case.name, case.passed, case.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> List[CheckCase]:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "total": len(self.cases),
            "failed": len(self.failures),
            "cases": [c.to_dict() for c in self.cases],
        }

    def rows(self) -> List[Dict[str, Any]]:
        return [{"suite": self.title, **c.to_dict()} for c in self.cases]


@dataclass
class OracleCase:
    name: str
    closed_form: float
    numeric: float
    rel_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.rel_error <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "closed_form": self.closed_form,
            "numeric": self.numeric,
            "rel_error": self.rel_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass
class OracleReport:
    """Closed form against numeric value, one case per comparison."""

    title: str
    cases: List[OracleCase] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def compare(self, name: str, closed_form: float, numeric: float, tolerance: float) -> OracleCase:
        case = OracleCase(name, float(closed_form), float(numeric),
                          relative_error(float(closed_form), float(numeric)), tolerance)
        self.cases.append(case)
        return case

    def record(self, name: str, rel_error: float, tolerance: float,
               closed_form: float = 0.0, numeric: float = 0.0) -> OracleCase:
        """Record a case whose error measure is not a plain scalar comparison."""
        case = OracleCase(name, float(closed_form), float(numeric), float(rel_error), tolerance)
        self.cases.append(case)
        return case

    def extend(self, other: "OracleReport"):
        self.cases.extend(other.cases)
        self.warnings.extend(other.warnings)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> List[OracleCase]:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "total": len(self.cases),
            "failed": len(self.failures),
            "warnings": list(self.warnings),
            "cases": [c.to_dict() for c in self.cases],
        }

    def rows(self) -> List[Dict[str, Any]]:
        return [{"suite": self.title, **c.to_dict()} for c in self.cases]
