"""Exception hierarchy shared by the spectral modules and the CLI"""


class SpectralError(Exception):
    """Base class for every error raised by this package"""


class ValidationError(SpectralError, ValueError):
    """Malformed input: bad family, bad file, unknown scheme, size caps"""


class LengthError(ValidationError):
    """Empty input or mismatched lengths"""


class DomainError(ValidationError):
    """Argument outside its mathematical domain"""


class NotHermitianError(ValidationError):
    """Stored asymmetry or imaginary spectral residue above tolerance"""


class NumericalError(SpectralError, ArithmeticError):
    """A computed quantity violates a numerical requirement"""


class NotPositiveDefiniteError(NumericalError):
    """Smallest eigenvalue estimate is not strictly positive"""
