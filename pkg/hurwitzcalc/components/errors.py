"""This module contains the exceptions raised by the calculator"""


class HurwitzCalcError(Exception):
    """Base class for all errors reported to the user"""

    exit_code = 1


class ValidationError(HurwitzCalcError, ValueError):
    """Raised when an input does not have the expected shape or range"""

    exit_code = 2


class AmbientMismatchError(ValidationError):
    """Raised when two Chow classes live in different rings"""


class ShapeError(ValidationError):
    """Raised when vector lengths or matrix dimensions do not fit together"""


class OutOfRangeError(ValidationError):
    """Raised when an exponent vector has the wrong total degree or leaves the box [0, n]"""


class SpecRejectedError(HurwitzCalcError):
    """Raised when a well-formed variety presentation violates a mathematical precondition"""

    exit_code = 3


class InternalConsistencyError(HurwitzCalcError):
    """Raised when two independent computations of the same number disagree"""
