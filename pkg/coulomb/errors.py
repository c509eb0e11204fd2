from __future__ import annotations

from typing import List, Optional, Sequence


class CoulombError(Exception):
    """Base class for every error raised by the engine."""


class InputError(CoulombError, ValueError):
    """Rejected input: malformed data, wrong sizes, failed preconditions."""


class GaugeError(InputError):
    def __init__(self, message: str, violations: Optional[Sequence[str]] = None):
        super().__init__(message)
        self.violations: List[str] = list(violations or [message])


class AdmissibilityError(InputError):
    pass


class NotApplicableError(InputError):
    pass


class InvarianceError(InputError):
    pass


class DiagramError(InputError):
    pass


class DegenerateDiagramError(DiagramError):
    pass


class ConfigError(InputError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class ConventionError(CoulombError, RuntimeError):
    """A sign or normalization convention turned out inconsistent."""


class SolveError(CoulombError, RuntimeError):
    """A bounded linear solve found no solution."""


class NotDivisibleError(CoulombError, ArithmeticError):
    pass


__all__ = [
    "AdmissibilityError",
    "ConfigError",
    "ConventionError",
    "CoulombError",
    "DegenerateDiagramError",
    "DiagramError",
    "GaugeError",
    "InputError",
    "InvarianceError",
    "NotApplicableError",
    "NotDivisibleError",
    "SolveError",
]
