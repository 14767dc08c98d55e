"""Exception types shared across the package."""


class ScrewMotionError(Exception):
    """Base class for all library-specific errors."""


class AngleNearPiError(ScrewMotionError):
    """Rotation angle is within the excluded neighbourhood of pi.

    The matrix logarithm (and the inverse dexp operator) become ill-defined
    as the rotation angle approaches pi; inputs beyond pi - 1e-6 are
    rejected instead of returning a silently inaccurate result.
    """


class LogDomainError(ScrewMotionError):
    """A supplied screw coordinate lies outside the logarithm domain."""


class InsufficientJetError(ScrewMotionError):
    """A twist jet does not carry enough derivatives for the requested order."""


class BadOrderError(ScrewMotionError):
    """Requested interpolation order is not supported."""


class OutOfDomainError(ScrewMotionError):
    """Curve evaluated outside its time domain [0, T]."""


class ConflictingGoalError(ScrewMotionError):
    """Terminal pose and terminal screw coordinate were both given but disagree."""
