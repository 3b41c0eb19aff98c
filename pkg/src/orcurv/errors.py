"""Exception hierarchy.  Everything raised on bad input derives from OrcurvError."""

from __future__ import annotations


class OrcurvError(Exception):
    """Base class for library errors."""


class ComplexError(OrcurvError, ValueError):
    """Invalid complex construction."""


class LoopEdge(ComplexError):
    pass


class DuplicateEdge(ComplexError):
    pass


class NonPositiveLength(ComplexError):
    pass


class FaceUsesMissingEdge(ComplexError):
    pass


class IndexOutOfRange(ComplexError, IndexError):
    pass


class NotAnEdge(OrcurvError, ValueError):
    pass


class Unreachable(OrcurvError):
    def __init__(self, source: int, target: int):
        super().__init__(f"vertex {target} is unreachable from vertex {source}")
        self.source = source
        self.target = target


class IsolatedVertex(OrcurvError, ValueError):
    pass


class NegativeMass(OrcurvError, ValueError):
    """The walk would put negative mass on its centre; ``max_t`` is the largest admissible time."""

    def __init__(self, message: str, max_t=None):
        super().__init__(message)
        self.max_t = max_t


class ZeroNormalizer(OrcurvError, ValueError):
    pass


class InvalidMeasure(OrcurvError, ValueError):
    pass


class InvalidTime(OrcurvError, ValueError):
    pass


class InfeasibleMarginals(OrcurvError, ValueError):
    pass


class NumericOverflow(OrcurvError, ArithmeticError):
    """Internal consistency failure in the exact solver.  Should never happen."""


class ShapeMismatch(OrcurvError, ValueError):
    pass


class TooLarge(OrcurvError, ValueError):
    pass


class MarginalsOffLattice(OrcurvError, ValueError):
    pass


class SameVertex(OrcurvError, ValueError):
    pass


class NotInLinearRegime(OrcurvError):
    pass


class DegreeTooSmall(OrcurvError, ValueError):
    pass


class FacesMissing(OrcurvError, ValueError):
    pass


class NotAGeodesic(OrcurvError, ValueError):
    pass


class AngleOutOfRange(OrcurvError, ValueError):
    pass


class InvalidLaplacian(OrcurvError, ValueError):
    pass


class MissingWeight(OrcurvError, ValueError):
    pass


class NonPositiveWeight(OrcurvError, ValueError):
    pass


class UnknownName(OrcurvError, ValueError):
    pass


class RadiusTooSmall(OrcurvError, ValueError):
    pass


class ParseError(OrcurvError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ExcludedDegrees(OrcurvError, ValueError):
    """Degree pair outside the closed-form table's validity."""
