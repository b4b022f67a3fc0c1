import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Counterexample:
    """First coordinate at which two composites disagree."""

    position_path: Tuple[int, ...]
    direction_path: Tuple[int, ...]
    lhs: str
    rhs: str

    def to_json(self) -> Dict[str, Any]:
        return {
            "position_path": list(self.position_path),
            "direction_path": list(self.direction_path),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class LawReport:
    """
    Outcome of one law check.

    `passed` is True exactly when no counterexample is recorded. Composite
    checks keep their sub-laws in `children` so a failure names the equation
    that broke.
    """

    law: str
    passed: bool
    counterexample: Optional[Counterexample] = None
    stats: Dict[str, Any] = field(default_factory=dict)
    children: List["LawReport"] = field(default_factory=list)

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError(f"Law '{self.law}' passed but carries a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError(f"Law '{self.law}' failed without a counterexample")

    @staticmethod
    def combine(law: str, children: Sequence["LawReport"], stats: Optional[Dict[str, Any]] = None) -> "LawReport":
        failing = [child for child in children if not child.passed]
        merged = dict(stats or {})
        merged.setdefault("checked", len(children))
        merged.setdefault("failed", len(failing))
        return LawReport(
            law=law,
            passed=not failing,
            counterexample=failing[0].counterexample if failing else None,
            stats=merged,
            children=list(children),
        )

    def failures(self) -> List["LawReport"]:
        """Leaf reports that failed, depth first."""
        if self.passed:
            return []
        if not self.children:
            return [self]
        found: List[LawReport] = []
        for child in self.children:
            found.extend(child.failures())
        return found

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"law": self.law, "pass": self.passed, "stats": dict(self.stats)}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample.to_json()
        if self.children:
            data["children"] = [child.to_json() for child in self.children]
        return data

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.law}"
        if self.counterexample is not None:
            c = self.counterexample
            text += f" at position {list(c.position_path)} direction {list(c.direction_path)}: {c.lhs} != {c.rhs}"
        return text


REPORT_SCHEMA_VERSION = 1


@dataclass
class Report:
    """
    What one CLI command produced.

    The JSON form always has the keys command, exit_status, results and
    schema_version; errors put `error` and `message` under results.
    """

    command: str
    results: Dict[str, Any]
    exit_status: int = 0
    lines: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "results": self.results,
            "exit_status": self.exit_status,
            "schema_version": REPORT_SCHEMA_VERSION,
        }
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        if self.lines:
            return "\n".join(self.lines)
        lines = []
        for key, value in self.results.items():
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {item}" for item in value)
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines)
