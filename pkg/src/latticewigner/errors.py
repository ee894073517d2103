"""Exception types shared across the package.

The class name of each exception is what the command line reports as the
error name, so names are part of the public surface.
"""


class LatticeWignerError(Exception):
    """Base class for domain errors raised by this package."""


class NotPrime(LatticeWignerError, ValueError):
    pass


class ModulusMismatch(LatticeWignerError, ValueError):
    pass


class ZeroDivision(LatticeWignerError, ZeroDivisionError):
    pass


class EvenCharacteristic(LatticeWignerError, ValueError):
    pass


class DegenerateBasis(LatticeWignerError, ValueError):
    pass


class DimensionMismatch(LatticeWignerError, ValueError):
    pass


class IndexOutOfRange(LatticeWignerError, IndexError):
    pass


class WrongBasis(LatticeWignerError, ValueError):
    pass


class NotNormalized(LatticeWignerError, ValueError):
    pass


class NonHermitianInput(LatticeWignerError, ValueError):
    pass


class InsufficientQuadrature(LatticeWignerError, ValueError):
    pass


class BadModeIndex(LatticeWignerError, ValueError):
    pass
