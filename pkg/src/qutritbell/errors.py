"""Exception types shared across the package."""


class QutritBellError(Exception):
    """Base class for all package-specific errors."""


class ModeMismatchError(QutritBellError):
    """Operands mix exact and float numeric modes."""


class DimensionMismatchError(QutritBellError):
    """Operand shapes are incompatible with the requested operation."""


class NotHermitianError(QutritBellError):
    """A matrix required to be Hermitian is not (within tolerance)."""


class ZeroMatrixError(QutritBellError):
    """A nonzero matrix was required."""


class NotNormalizedError(QutritBellError):
    """A state or amplitude set required to have unit norm does not."""


class UnknownLabelError(QutritBellError):
    """An unrecognized state label was given."""


class NotDiagonalizedByBasisError(QutritBellError):
    """The supplied basis does not diagonalize the operator."""


class NegativeEigenvalueError(QutritBellError):
    """An eigenvalue is negative beyond the allowed tolerance."""


class ShotsZeroError(QutritBellError):
    """Sampling was requested with fewer than one shot."""
