"""Exception types shared across the package."""


class CrystalSumsError(Exception):
    """Base class for all package errors."""


class CapExceeded(CrystalSumsError):
    """An enumeration or rank exceeded its configured size cap."""


class UnsupportedError(CrystalSumsError):
    """The requested combination (type, factor, restriction) is out of scope."""


class IsomorphismError(CrystalSumsError):
    """The parallel BFS for the combinatorial R-matrix found a mismatch.

    This indicates broken affine arrows, not bad user input.
    """


class EnergyConsistencyError(CrystalSumsError):
    """Local energy propagation produced conflicting values on a cycle."""


class InvolutionError(CrystalSumsError):
    """The sign-reversing involution left its domain or lost its pairing."""


class NonIntegralExponent(CrystalSumsError):
    """A q-exponent that must be an integer came out fractional."""
