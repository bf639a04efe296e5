class JetGroupsError(Exception):
    """Base class for every error raised by the jets library."""


class JetInputError(JetGroupsError, ValueError):
    """Malformed, mismatched or out-of-range input."""


class AlgebraDefinitionError(JetInputError):
    """An algebra table or matrix basis that violates its declared axioms."""


class SingularMatrixError(JetGroupsError, ArithmeticError):
    """A matrix (or jet constant term) that has no inverse."""


class RepresentationError(JetGroupsError):
    """A matrix that cannot be written in the coordinates of the algebra basis."""
