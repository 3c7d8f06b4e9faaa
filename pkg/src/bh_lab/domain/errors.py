"""Typed errors raised by the lab.

Each error also derives from the builtin a caller would naturally catch,
so ``except ValueError`` keeps working around validation failures.
"""


class LabError(Exception):
    """Base class for all errors raised by bh_lab."""


class DimensionMismatchError(LabError, ValueError):
    """Shapes, orders or vector lengths do not agree."""


class ExponentRangeError(LabError, ValueError):
    """An exponent lies outside the range an operation accepts."""


class ParameterRangeError(LabError, ValueError):
    """An integer or real parameter violates its documented range."""


class InvalidPartitionError(LabError, ValueError):
    """Blocks are empty, overlap, or do not cover the tensor axes."""


class InconsistentWeightsError(LabError, ValueError):
    """Convex weights do not reproduce the target reciprocal exponents."""


class MissingKahaneConstantError(LabError, KeyError):
    """No Kahane constant was supplied for an exponent the recursion needs."""


class BudgetExceededError(LabError, RuntimeError):
    """An exhaustive computation would exceed its configured budget."""


class MethodFieldMismatchError(LabError, ValueError):
    """The requested algorithm does not apply to the scalar field."""


class ZeroFormError(LabError, ZeroDivisionError):
    """A ratio against the norm of the zero form was requested."""


class MalformedTensorFileError(LabError, ValueError):
    """A tensor document could not be parsed."""
