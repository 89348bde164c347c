"""Exception hierarchy shared by every module."""


class HKError(Exception):
    """Base class for all errors raised by hkmult."""


class DomainError(HKError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class UnsupportedDimensionError(DomainError):
    pass


class CharacteristicError(DomainError):
    pass


class InfiniteColengthError(DomainError):
    """The ideal is not primary to the maximal ideal, so the quotient is infinite."""


class UnboundedIntegralError(DomainError):
    pass


class SpecParseError(HKError, ValueError):
    pass


class CapacityError(HKError, RuntimeError):
    """A computation would exceed a configured size cap."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap
