"""Exception types shared across the package."""


class HardynumError(ValueError):
    """Base class for all package-specific errors."""


class QueryOutsideDomain(HardynumError):
    """A geometric query was made at a point not inside the domain."""


class ZeroScale(HardynumError):
    """Affine map with zero linear coefficient."""


class UnsupportedShape(HardynumError):
    """No closed form is available for this domain."""


class BasepointOutsideDomain(HardynumError):
    """Walk start point is not an interior point."""


class DegenerateDomain(HardynumError):
    """Domain has empty interior or no reachable boundary."""


class ZeroMeasure(HardynumError):
    """A decay profile entry is exactly zero where a positive value is required."""


class TooFewPoints(HardynumError):
    """Not enough profile entries for the requested computation."""


class QuadratureFailure(HardynumError):
    """Numerical integration failed to converge to the requested tolerance."""


class ZeroOnDisk(HardynumError):
    """Integrand needs |f|**(p-2) with p < 2 but f has a zero."""


class UnsupportedImage(HardynumError):
    """The image domain of the map is outside what the check supports."""


class DivergentCase(HardynumError):
    """The requested exponent makes both sides of the identity infinite."""
