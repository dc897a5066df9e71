"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or invalid user-supplied data (CSV rows, table shape)."""


class DegeneracyError(ValueError):
    """A system with no unique solution: zero-variance regressor, vanishing
    determinant, or coincident growth rates."""


class InconsistentSystemError(ValueError):
    """The rank-2 system A c = b has no solution because the solvability
    condition b_labor + b_output = b_capital fails."""
