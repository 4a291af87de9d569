"""Error types raised by the kinematics and coupling routines."""


class MasslessUnsupported(ValueError):
    """Raised for momenta with non-positive invariant mass squared."""


class NotARotation(ValueError):
    """Raised when an SU(2) element was required but not supplied."""


class InvalidOrbitalLabel(ValueError):
    """Raised for orbital labels that are not nonnegative integers."""


class InvalidChannel(ValueError):
    """Raised for coupling labels outside the allowed channel set."""


class BelowThreshold(ValueError):
    """Raised when the total invariant mass cannot produce the pair."""


class GridTooCoarse(ValueError):
    """Raised for quadrature grids below the minimum supported size."""


class GridMismatch(ValueError):
    """Raised when two states do not share the same quadrature grid."""
