"""Pass/fail reports shared by the verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status} {self.name} ({self.cases} cases){tail}"


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def run_check(name: str, cases, predicate) -> Check:
    count = 0
    for case in cases:
        count += 1
        if not predicate(*case):
            return Check(name, False, count, repr(case))
    return Check(name, True, count)
