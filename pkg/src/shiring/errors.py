"""Exception types shared across the package."""


class ShiringError(Exception):
    """Base class for every error raised by this library."""


class InvalidTypeError(ShiringError, ValueError):
    """Unknown Dynkin family or a rank outside the allowed bounds."""


class NotAntichainError(ShiringError, ValueError):
    """Roots that were required to be pairwise incomparable are not."""


class ChamberError(ShiringError):
    """A point that must lie strictly inside the dominant chamber does not."""


class BoundaryError(ShiringError):
    """A point lies on one of the arrangement hyperplanes.

    Carries the offending root (coefficient tuple) and the value the root
    takes at the point, so callers can report exactly which hyperplane
    was hit.
    """

    def __init__(self, root, value):
        self.root = tuple(root)
        self.value = value
        super().__init__(
            f"point lies on the hyperplane of root {self.root} (value {value})"
        )


class InvariantError(ShiringError):
    """An internal consistency check failed: a bug, not a bad input."""
