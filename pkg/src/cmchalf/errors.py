"""Exception and warning types shared across the package."""


class CmcError(Exception):
    """Base class for package errors."""


class ChartMismatch(CmcError):
    """Operation applied to a state in the wrong chart."""


class DomainError(CmcError):
    """Argument outside the mathematical domain of an operation."""


class VerticalShiftTooNegative(CmcError):
    """Vertical shift at or below -min(height); the translate leaves the chart."""


class DomainShrunk(CmcError):
    """Isometry forces a smaller exterior domain.

    Carries the new admissible inner radius so the caller can retry on the
    shrunk domain.
    """

    def __init__(self, new_inner_radius, message=None):
        self.new_inner_radius = float(new_inner_radius)
        super().__init__(message or
                         f"domain shrinks to inner radius {new_inner_radius:.6f}")


class NotMonotone(CmcError):
    """Radial reparametrization is not increasing anywhere near the boundary."""


class NotImmersed(CmcError):
    """Induced metric degenerates; the field leaves the immersion regime."""


class DegenerateBeta(CmcError):
    """beta = 1 is the entire graph, not an annulus."""


class MaxIterations(CmcError):
    """Newton failed to converge within the iteration budget."""


class LinearSolveSingular(CmcError):
    """Bordered linear system is rank-deficient beyond the expected kernel."""


class LeftNeighborhood(CmcError):
    """Damping safeguard rejected every step; iterate left the local basin."""


class UnexpectedKernel(CmcError):
    """Exterior-domain operator is numerically singular (grid too coarse)."""


class BaseNotCMC(UserWarning):
    """Linearization requested about a state that is not CMC to tolerance."""
