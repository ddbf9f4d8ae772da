"""Exception types shared across the package.

Every error raised by the library derives from PlaneConfigError so callers
(CLI, service) can map failures to exit codes / HTTP statuses in one place.
"""


class PlaneConfigError(Exception):
    """Base class for all library errors."""


class ZeroVector(PlaneConfigError):
    """All homogeneous coordinates vanish."""


class IdenticalPoints(PlaneConfigError):
    """Two projectively equal points where distinct ones are required."""


class IdenticalLines(PlaneConfigError):
    """Two projectively equal lines where distinct ones are required."""


class DegenerateInput(PlaneConfigError):
    """Input admits no unique nondegenerate conic (or a singular matrix)."""


class PointNotOnLine(PlaneConfigError):
    """A point handed to a line-local operation is not incident."""


class InvalidSize(PlaneConfigError):
    """Configuration size outside the supported range {5, 6, 7}."""


class NotSimple(PlaneConfigError):
    """Configuration has a collinear triple."""


class NotTypical(PlaneConfigError):
    """Configuration has a collinear triple or a coconic sextuple."""


class InvalidComponentCount(PlaneConfigError):
    """Adjacency graph component count outside the admissible set."""


class UnknownCode(PlaneConfigError):
    """Derivative code does not appear in the classification table."""


class CanonicalizationFailed(PlaneConfigError):
    """No rotation/reflection of the cycle realizes the canonical pattern."""


class NotApplicable(PlaneConfigError):
    """Invariant undefined for inputs of this shape or convexity type."""


class NotCyclic(NotApplicable):
    """Operation requires a cyclic (connected-cycle) subconfiguration."""


class NotHeptagonal(NotApplicable):
    """Operation requires a heptagonal (f7 > 0) configuration."""


class Ambiguous(PlaneConfigError):
    """A uniqueness assumption failed (e.g. several marked-point candidates)."""


class UnknownFingerprint(PlaneConfigError):
    """Canonical fingerprint missing from the calibration table."""


class RepDegenerate(PlaneConfigError):
    """A path's point representative vanishes at some parameter."""


class NotFound(PlaneConfigError):
    """Path search exhausted its budget without a certified path."""


class ClassMismatch(PlaneConfigError):
    """Path search endpoints lie in different deformation classes."""


class ImageDegenerate(PlaneConfigError):
    """A quadratic transform produced a non-typical image."""


class ParseError(PlaneConfigError):
    """Malformed configuration file or request payload."""


class SeedCorrupt(PlaneConfigError):
    """A stored seed no longer reproduces its frozen class data."""
