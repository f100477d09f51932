"""Exception types shared across the toolkit.

Names are part of the error contract: callers (and the CLI exit-code map)
match on these classes, not on messages.
"""


class TorsorKitError(Exception):
    """Base class for all toolkit errors."""


class WeightSumError(TorsorKitError):
    """Weighted averaging requires integer weights with total weight 1."""


class LatticeMismatch(TorsorKitError):
    """Torus points from different lattices cannot be combined."""


class SingularCurve(TorsorKitError):
    """Curve discriminant vanishes; no smooth group law."""


class OffCurve(TorsorKitError):
    """Affine coordinates do not satisfy the curve equation."""


class NotDivisible(TorsorKitError):
    """Base change order does not divide every multiplicity."""


class DegenerateModel(TorsorKitError):
    """Weierstrass discriminant is identically zero."""


class UnclassifiedValuations(TorsorKitError):
    """Valuation triple matches no row of the fiber-type table."""


class UnsupportedType(TorsorKitError):
    """Logarithmic transforms are defined only along I_n fibers here."""


class GcdError(TorsorKitError):
    """Multiplicity vector has gcd > 1; no total-multiplicity-1 system exists."""


class DomainError(TorsorKitError):
    """Evaluation point outside the punctured disk, or unsupported family."""


class LiftFailure(TorsorKitError):
    """Adjacent circle samples jump more than half a lattice cell (under-sampling)."""
