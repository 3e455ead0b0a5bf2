"""Exception types shared across the package."""


class InvalidSize(ValueError):
    """The vector length n is outside the supported range of an operation."""


class DimensionMismatch(ValueError):
    """Two operands have incompatible lengths."""


class DegenerateVector(ValueError):
    """A vector collapsed to (numerical) zero where a direction was required."""


class ConstraintViolation(ValueError):
    """Input does not satisfy the mean-zero / unit-norm constraints."""


class BlockOutOfRange(IndexError):
    """Requested invariant-block index does not exist for this n."""


class ConvergenceFailure(RuntimeError):
    """The eigensolver did not reach the required residual."""


class QuadratureFailure(RuntimeError):
    """Adaptive quadrature could not meet its tolerance within budget."""


class NonFinite(ValueError):
    """A sampled function produced NaN or infinity."""


class RangeError(ValueError):
    """A requested truncation order is outside the available table."""
