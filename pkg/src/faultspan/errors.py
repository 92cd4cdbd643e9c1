"""Exception types and validation-result containers shared across modules."""

from __future__ import annotations

from dataclasses import dataclass, field


class FaultspanError(Exception):
    """Base class for all contract violations raised by this package."""


class NonSymmetric(FaultspanError):
    pass


class NegativeDistance(FaultspanError):
    pass


class NonzeroDiagonal(FaultspanError):
    pass


class IdentityViolation(FaultspanError):
    pass


class TriangleViolation(FaultspanError):
    pass


class DimensionMismatch(FaultspanError):
    pass


class Disconnected(FaultspanError):
    pass


class DuplicatePoints(FaultspanError):
    pass


class FaultNotSubset(FaultspanError):
    pass


class FOutOfRange(FaultspanError):
    pass


class EpsOutOfRange(FaultspanError):
    pass


class ThetaOutOfRange(FaultspanError):
    pass


class BadParams(FaultspanError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failed check: a kind tag, the offending indices, and a message."""

    kind: str
    where: tuple
    message: str

    def __str__(self) -> str:
        return f"{self.kind}{self.where}: {self.message}"


@dataclass
class ValidationResult:
    """Outcome of a verification pass; carries the violations found."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok
