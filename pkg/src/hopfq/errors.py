"""Exception types raised across the package."""


class HopfError(ValueError):
    """Base class for all domain errors."""


class NearZeroQuaternion(HopfError):
    """Inversion requested for a quaternion whose norm is below the singular threshold."""


class InvalidAxis(HopfError):
    """Exponential axis is not a unit pure imaginary quaternion."""


class NotNormalized(HopfError):
    pass


class PoleState(HopfError):
    """The state sits at Omega = 0 or pi/2 where the two-term split degenerates."""


class NotSeparable(HopfError):
    pass


class InconsistentOmega(HopfError):
    """|Q| does not match cot(Omega)."""


class InvalidFiberPoint(HopfError):
    """Fiber quaternion is not a unit quaternion."""


class DegenerateOmega(HopfError):
    pass


class BadDensityMatrix(HopfError):
    pass


class AtPole(HopfError):
    """Point coincides with the stereographic projection pole."""


class OracleMismatch(AssertionError):
    """Two independent computation paths disagree beyond tolerance."""
