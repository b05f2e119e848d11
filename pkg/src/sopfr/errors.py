class DomainError(ValueError):
    """An argument lies outside the domain of the requested computation."""


class DegeneracyError(ArithmeticError):
    """The least-squares normal matrix is singular or numerically rank deficient."""


class ResourceError(MemoryError):
    """The sieve table could not be allocated."""
