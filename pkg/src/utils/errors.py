"""
Exception hierarchy for gptkit.

Every failure raised by the library derives from GptError. Errors caused by
bad input values also derive from ValueError so callers can catch them the
usual way.
"""

from typing import Optional


class GptError(Exception):
    """Base class for all gptkit errors."""


class EmptyTable(GptError, ValueError):
    """A probability table has no rows or no columns."""


class TableParseError(GptError, ValueError):
    """A table cell could not be parsed or lies outside [0, 1]."""

    def __init__(self, message: str, row: Optional[int] = None, col: Optional[int] = None):
        location = ""
        if row is not None:
            location = f" (row {row}" + (f", column {col})" if col is not None else ")")
        super().__init__(f"{message}{location}")
        self.row = row
        self.col = col


class SchemaError(GptError, ValueError):
    """A JSON document does not match the expected schema."""


class DimensionMismatch(GptError, ValueError):
    """Vectors or matrices have incompatible lengths."""


class SingularSystem(GptError, ArithmeticError):
    """No linearly independent set of states spans the effect space."""


class SingularBasis(GptError, ArithmeticError):
    """A supplied basis is not linearly independent."""


class DegenerateInput(GptError, ValueError):
    """A representation cannot be converted in the requested mode."""


class NotAState(GptError, ValueError):
    """A vector lies outside the state cone."""


class NotAnEffect(GptError, ValueError):
    """A vector lies outside the dual cone."""


class InvalidCompletion(GptError, ValueError):
    """A set of effects cannot be completed to a measurement."""


class IncompleteMeasurement(GptError, ValueError):
    """A measurement does not sum to the unit effect or is not binary."""


class Unsupported(GptError, NotImplementedError):
    """The operation is not available for this kind of system."""


class RestrictedSubsystem(GptError, ValueError):
    """A composition rule needs unrestricted subsystems."""


class InvalidJointCone(GptError, ValueError):
    """An explicit joint cone violates the composition conditions."""


class ZeroProbabilityCondition(GptError, ZeroDivisionError):
    """Conditioning on an outcome that has probability zero."""


class UnboundedCone(GptError, ArithmeticError):
    """An optimization over a joint cone is unbounded."""


class MissingUnit(GptError, ValueError):
    """No functional equals one on every state of a table."""


class OperationCancelled(GptError):
    """A long-running operation was cancelled through its token."""
