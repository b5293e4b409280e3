"""Semantic exception hierarchy for the qmorse package.

Public functions never raise bare ValueError; they raise one of the types
below so callers (and the CLI) can map failures to stable exit codes.
"""

from __future__ import annotations


class QmorseError(Exception):
    """Base error for this package."""


class DomainError(QmorseError, ValueError):
    """Input outside a function's mathematical domain (NaN/Inf, wrong sign)."""


class RangeError(QmorseError, ArithmeticError):
    """Evaluation would overflow or leave the supported numeric range.

    Carries the offending value and the admissible threshold so error
    messages can state both.
    """

    def __init__(self, message: str, *, value: float | None = None,
                 threshold: float | None = None):
        super().__init__(message)
        self.value = value
        self.threshold = threshold


class InvalidModelError(QmorseError, ValueError):
    """Model parameters violate an invariant (e.g. no bound level exists)."""


class SpectrumError(QmorseError, ValueError):
    """A spectrum-level request cannot be satisfied (index past the ladder)."""


class GridError(QmorseError, ValueError):
    """Finite-difference grid or domain is inadequate for the requested solve."""

    def __init__(self, message: str, *, boundary_amplitude: float | None = None):
        super().__init__(message)
        self.boundary_amplitude = boundary_amplitude


class ConfigError(QmorseError, ValueError):
    """A configuration document or CLI parameter set fails validation.

    ``field`` holds a dotted path into the offending document when known.
    """

    def __init__(self, message: str, *, field: str | None = None):
        super().__init__(message)
        self.field = field

    def __str__(self) -> str:  # pragma: no cover - formatting only
        base = super().__str__()
        return f"{self.field}: {base}" if self.field else base
