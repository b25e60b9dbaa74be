"""Exception hierarchy shared by all modules."""


class QCDError(Exception):
    """Base class; ``kind`` is the machine-readable name used by the CLI."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class NotPrime(QCDError, ValueError):
    pass


class NotIrreducible(QCDError, ValueError):
    pass


class CapExceeded(QCDError):
    pass


class SpecMismatch(QCDError, TypeError):
    pass


class DivisionByZero(QCDError, ZeroDivisionError):
    pass


class NotCoprime(QCDError, ValueError):
    pass


class BadCharacteristic(QCDError, ValueError):
    pass


class BasisMismatch(QCDError, ValueError):
    pass


class OverlapViolation(QCDError, ValueError):
    pass


class NotUnit(QCDError, ValueError):
    pass


class EquivalenceViolation(QCDError, AssertionError):
    """A proven equivalence failed on concrete data: always an implementation bug."""
