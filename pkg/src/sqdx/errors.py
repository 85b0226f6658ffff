"""Exception types shared across the package."""


class StateFormatError(ValueError):
    """Input does not match the expected state-file structure (wrong keys,
    wrong shapes, non-numeric entries)."""


class StateValidationError(ValueError):
    """Base class for failures to validate a matrix as a two-qubit X-state."""


class NotXShaped(StateValidationError):
    """An entry outside the diagonal/anti-diagonal pattern is nonzero."""


class NotHermitian(StateValidationError):
    """The matrix is not Hermitian within tolerance."""


class TraceNotOne(StateValidationError):
    """The trace differs from 1 beyond tolerance."""


class NotPositive(StateValidationError):
    """A diagonal entry or a 2x2 block determinant violates positivity."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DegenerateBranch(ArithmeticError):
    """A measurement branch has probability zero, so its conditional state
    is undefined (by convention it contributes zero entropy)."""
