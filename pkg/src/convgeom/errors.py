from typing import Any, Optional


class ConvGeomError(Exception):
    """Base Exception for all errors in convgeom."""

    #: short-string error code
    error: str = ""
    #: long-string to describe this error
    description: str = ""

    def __init__(self, description: Optional[str] = None):
        if description is not None:
            self.description = description

        message = "{}: {}".format(self.error, self.description)
        super(ConvGeomError, self).__init__(message)


class InvalidBodyError(ConvGeomError):
    """Raised when a body spec can not be parsed into a convex body."""
    error = "invalid_body"


class NonSymmetricBodyError(InvalidBodyError):
    error = "non_symmetric_body"
    description = "Body must be centrally symmetric about the origin"


class InvalidParameterError(ConvGeomError):
    error = "invalid_parameter"


class UnsupportedMethodError(ConvGeomError):
    error = "unsupported_method"


class EmptyIntersectionError(ConvGeomError):
    error = "empty"
    description = "Intersection has empty interior"


class DeltaOutOfRangeError(ConvGeomError):
    error = "delta_out_of_range"
    description = "delta outside (0, min(1,τⁿ)|K|)"


class NotSmoothError(ConvGeomError):
    error = "not_smooth"
    description = "Operation requires a smooth strictly convex body"


class CurvatureUnavailableError(ConvGeomError):
    error = "unavailable"
    description = "No closed-form curvature for this body"


class IllConditionedCrossingError(ConvGeomError):
    """Raised when the two boundaries meet nearly tangentially, so that
    the denominator ``sqrt(1 - <M,N>^2)`` degenerates.
    """
    error = "ill_conditioned_crossing"
    description = "Boundaries cross near tangentially"


class QuadratureMismatchError(ConvGeomError):
    error = "quadrature_mismatch"
    description = "Surface integral forms disagree"


class NoiseFloorError(ConvGeomError):
    error = "noise_floor"
    description = "h too small for volume tolerance"


class BudgetExceededError(ConvGeomError):
    """Raised when a tolerance can not be reached within the vertex or
    sample budget. The best estimate reached so far is kept in
    ``estimate``.
    """
    error = "budget_exceeded"
    description = "Tolerance unreachable within budget"

    def __init__(self, description: Optional[str] = None, estimate: Any = None):
        super(BudgetExceededError, self).__init__(description)
        #: best estimate computed before the budget ran out
        self.estimate = estimate
