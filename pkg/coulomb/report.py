"""PASS/FAIL records shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Tuple


def _value(text: object) -> str:
    text = str(text)
    if not text or any(ch.isspace() for ch in text):
        return '"' + text.replace('"', "'") + '"'
    return text


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: Tuple[Tuple[str, str], ...] = ()

    def get(self, key: str, default: str = "") -> str:
        for k, v in self.detail:
            if k == key:
                return v
        return default

    def line(self) -> str:
        parts = ["PASS" if self.passed else "FAIL", self.name]
        parts += [f"{k}={_value(v)}" for k, v in self.detail]
        return " ".join(parts)


@dataclass
class Report:
    suite: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, /, **detail: object) -> Check:
        check = Check(name, bool(passed), tuple((k, str(v)) for k, v in detail.items()))
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> List[str]:
        return [f"{self.suite}: {c.line()}" for c in self.checks]


__all__ = ["Check", "Report"]
