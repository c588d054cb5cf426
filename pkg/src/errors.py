class StructuralError(ValueError):
    """Rank mismatch or an exponent pattern the Weyl model does not allow."""


class FourierDomainError(ValueError):
    """Laurent exponent in the reflected index of a Fourier transform."""


class PreconditionError(ValueError):
    """A theorem hypothesis (e.g. even twist) is not met."""


class ModuleError(ValueError):
    """A vector or monomial does not belong to the module it is used with."""
