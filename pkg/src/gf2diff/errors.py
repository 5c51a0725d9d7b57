"""Exception types shared across the package."""


class FieldError(ValueError):
    """Bad field construction parameters (degree, modulus)."""


class ReducibleModulusError(FieldError):
    pass


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ScanLimitError(RuntimeError):
    """An exhaustive scan was requested on a field that is too large."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed. Never expected on valid input."""
