"""Exception hierarchy shared by every compute module.

Compute code raises; only the command runners catch and turn these into
panels and exit codes.
"""

from __future__ import annotations

from typing import Any, Sequence


class IdealError(ValueError):
    """Base class for invalid algebraic input."""


class DimensionMismatch(IdealError):
    def __init__(self, expected: int, got: int, what: str = "operand") -> None:
        super().__init__(f"dimension mismatch: expected {expected}, got {got} ({what})")
        self.expected = expected
        self.got = got


class ZeroIdealError(IdealError):
    def __init__(self, operation: str) -> None:
        super().__init__(f"{operation}: the zero ideal is not accepted here")
        self.operation = operation


class UnitIdealError(IdealError):
    def __init__(self, operation: str) -> None:
        super().__init__(f"{operation}: the unit ideal is not accepted here")
        self.operation = operation


class NotSquarefreeError(IdealError):
    def __init__(self, operation: str, generator: str) -> None:
        super().__init__(f"{operation}: generator {generator} is not squarefree")
        self.operation = operation
        self.generator = generator


class ExponentOverflow(IdealError, OverflowError):
    def __init__(self, value: int, bound: int) -> None:
        super().__init__(f"exponent {value} exceeds the supported bound {bound}")
        self.value = value
        self.bound = bound


class ParseError(IdealError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class GraphError(IdealError):
    """Bad graph parameters, malformed graph JSON or unmet degree bounds."""


class HWheelError(GraphError):
    def __init__(self, violated: Sequence[int], details: Sequence[str]) -> None:
        listed = "; ".join(f"condition ({c}): {d}" for c, d in zip(violated, details))
        super().__init__(f"not an h-wheel: {listed}")
        self.violated = list(violated)
        self.details = list(details)


class CrossCheckError(RuntimeError):
    """Two independent computations of the same object disagreed."""


class BudgetExceeded(RuntimeError):
    """The time budget ran out; ``partial`` holds whatever evidence was gathered."""

    def __init__(self, message: str = "time budget exceeded", partial: Any = None) -> None:
        super().__init__(message)
        self.partial = partial
