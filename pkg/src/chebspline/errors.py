"""Exception types shared across the package."""


class ChebsplineError(Exception):
    """Base class for all package errors."""


class InvalidSectionError(ChebsplineError, ValueError):
    """A section descriptor is malformed or its parameters violate a family constraint."""


class DescriptorError(ChebsplineError, ValueError):
    """A JSON descriptor is structurally invalid."""


class PartitionError(ChebsplineError, ValueError):
    """Break points, multiplicities and order do not form a valid extended partition."""


class ConnectionMatrixError(ChebsplineError, ValueError):
    """A geometric-continuity connection matrix violates its shape constraints."""


class SingularSystemError(ChebsplineError, ArithmeticError):
    """A transition-function system is singular or could not be solved to tolerance.

    Signals that the requested space does not (numerically) admit a
    normalized B-spline basis.  Carries the 1-based index of the offending
    transition function and a condition estimate of the collocation matrix.
    """

    def __init__(self, message: str, index: int | None = None,
                 condition: float | None = None, residual: float | None = None):
        super().__init__(message)
        self.index = index
        self.condition = condition
        self.residual = residual


class RefinementError(ChebsplineError, ValueError):
    """A knot-insertion / order-elevation request is not applicable."""


class KnotRemovalError(ChebsplineError, ArithmeticError):
    """Exact knot removal failed; carries the best-approximation residual."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
