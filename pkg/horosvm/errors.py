"""
Exception hierarchy for horosvm.

Validation errors subclass ValueError so callers can catch either the
specific class or the builtin. The CLI maps these onto exit codes
(see commands/base.py).
"""

from typing import Optional


class HoroSVMError(Exception):
    """Base class for all horosvm errors."""


# --- Geometry ---

class BallInvariantError(HoroSVMError, ValueError):
    """A point lies on or outside the open unit ball."""


class GeometryError(HoroSVMError, ValueError):
    """Geometric precondition violated."""


class AntipodalError(GeometryError):
    """Sphere geodesic requested between (nearly) antipodal points."""


class DegeneratePoint(GeometryError):
    """Sample sits at the origin, where the hemisphere split is undefined."""


# --- Optimization ---

class NonFiniteObjective(HoroSVMError, ArithmeticError):
    """Objective returned NaN or Inf for loss or gradient."""


# --- Data ---

class DataError(HoroSVMError, ValueError):
    """Dataset violates a precondition of the requested operation."""


class EmptyDataset(DataError):
    pass


class SingleClassDataset(DataError):
    pass


class ClassTooSmall(DataError):
    pass


class InsufficientClassMembers(DataError):
    pass


class LengthMismatch(DataError):
    pass


class DimensionMismatch(DataError):
    pass


class LabelError(DataError):
    """Labels are not of the kind the operation needs (e.g. not +/-1)."""


class ParseError(DataError):
    """Malformed dataset file."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class InvariantError(DataError):
    """A dataset row has Euclidean norm >= 1."""

    def __init__(self, index: int, line: Optional[int] = None, norm: Optional[float] = None):
        self.index = index
        self.line = line
        self.norm = norm
        where = f"row {index}" if line is None else f"row {index} (line {line})"
        detail = "" if norm is None else f": norm {norm:.6g} is not inside the unit ball"
        super().__init__(f"{where}{detail}")


# --- Models ---

class ModelFormatError(HoroSVMError, ValueError):
    """Model file does not follow the expected layout."""
