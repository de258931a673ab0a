"""Exception types shared across the library.

Everything mathematically undefined derives from ComputationError so callers
(notably the CLI) can map it to a single failure class; malformed input text
raises ParseError instead.
"""


class ComputationError(Exception):
    """A requested operation is undefined or not certifiable from the inputs."""


class ZeroSeriesError(ComputationError):
    """Reciprocal or inverse of the zero series."""


class SideMismatchError(ComputationError):
    """A series was used on a side it is not representable on."""


class SideIndeterminateError(ComputationError):
    """A sum of two infinite series of opposite sides cannot be certified bounded."""


class OrderIndeterminateError(ComputationError):
    """The order is needed but no nonzero coefficient lies in the known window."""


class UndefinedProductError(ComputationError):
    """Matrix product outside the defined echelon-class cells."""


class CompositionUndefinedError(ComputationError):
    """Composition chi(omega) matches no defined side/order case."""


class NotInvertibleError(ComputationError):
    """Inverse requested for a series or matrix that has none."""


class PrecisionError(ComputationError):
    """A coefficient or entry lies outside the achievable known window."""


class GuardViolationError(ComputationError):
    """A window oracle cannot certify that the truncated sum is complete."""


class CheckFailedError(ComputationError):
    """An internal verification step that must hold mathematically did not."""


class ParseError(ValueError):
    """Malformed expression text; carries the offending position when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
