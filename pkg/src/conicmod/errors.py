"""Exception types shared across the package.

Everything a caller can trigger with bad input derives from ``DomainError``;
the CLI maps those to exit code 2.
"""


class DomainError(ValueError):
    pass


class NotInvertible(DomainError):
    pass


class BasisMismatch(DomainError):
    pass


class ModulusError(DomainError):
    """Modulus is not prime or exceeds the supported range."""


class EvenModulus(DomainError):
    pass


class EvenArgument(DomainError):
    pass


class UnsupportedCongruenceClass(DomainError):
    pass


class DegenerateCoefficient(DomainError):
    pass


class OracleScaleExceeded(DomainError):
    pass


class CurveMismatch(DomainError):
    pass


class NotOnCurve(DomainError):
    pass


class NotFound(DomainError):
    pass


class ExcludedValue(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class UnsupportedTau(DomainError):
    pass


class NonConvergentTau(DomainError):
    pass
