"""Exception hierarchy shared by every module."""


class CocycleLabError(Exception):
    """Base class for all errors raised by cocyclelab."""


class InvalidType(CocycleLabError, ValueError):
    """A root system type label or rank is out of range."""


class ZeroRoot(CocycleLabError, ValueError):
    """Reflection through the zero vector was requested."""


class NotInvolution(CocycleLabError, ArithmeticError):
    """An action matrix expected to square to the identity does not."""


class InvalidSignature(CocycleLabError, ValueError):
    """An involution signature has a negative entry or zero rank."""


class DegenerateTuple(CocycleLabError, ValueError):
    """Boundary points that must be distinct coincide (or nearly so)."""


class MultipleInfinities(DegenerateTuple):
    """More than one argument of a cross-ratio is the point at infinity."""


class SamplingFailure(CocycleLabError, RuntimeError):
    """Random sampling could not meet its constraints in the allotted attempts."""


class DegreeTooLarge(CocycleLabError, ValueError):
    """Alternation was requested in a degree whose permutation count is too large."""


class InvalidCheck(CocycleLabError, ValueError):
    """Unknown verification check name."""
