"""Exception hierarchy shared across the package."""


class WedgescatterError(Exception):
    """Base class for all package-specific failures."""


class DomainError(WedgescatterError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class IntegrationError(WedgescatterError):
    """ODE integration gave up before reaching the target coordinate.

    ``furthest_x`` is the coordinate reached when the step budget ran out.
    """

    def __init__(self, message: str, furthest_x: complex | float | None = None):
        super().__init__(message)
        self.furthest_x = furthest_x


class OverflowIntegrationError(IntegrationError):
    """The propagated state became non-finite or is not representable."""


class InstabilityError(WedgescatterError):
    """A contour integration blew up (growing-solution contamination)."""


class RefinementError(WedgescatterError):
    """A minimization bracket turned out not to be unimodal."""


class DomainSizeError(WedgescatterError):
    """The finite-difference box is too small for the requested spectrum."""


class InsufficientRangeError(WedgescatterError):
    """An energy scan did not contain enough spectral minima."""
