"""Structured outcome of a pass/fail check."""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class CheckReport:
    """Result of one named check; a failure names the first offending cell."""

    check: str
    passed: bool
    cell: Optional[Tuple[int, ...]] = None
    reason: str = ""
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def ok(cls, check: str, **details) -> "CheckReport":
        return cls(check=check, passed=True, details=details)

    @classmethod
    def fail(cls, check: str, cell, reason: str, **details) -> "CheckReport":
        return cls(check=check, passed=False, cell=tuple(cell) if cell is not None else None,
                   reason=reason, details=details)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        result = {"check": self.check, "status": self.status}
        if not self.passed:
            result["cell"] = list(self.cell) if self.cell is not None else None
            result["reason"] = self.reason
        if self.details:
            result["details"] = self.details
        return result
