class LehmerKError(Exception):
    """Base class for every error raised by the library"""
    exit_code = 1


class NotSquarefree(LehmerKError):
    pass


class UnsupportedField(LehmerKError):
    pass


class FieldMismatch(LehmerKError):
    pass


class BudgetExceeded(LehmerKError):
    pass


class NotCoprime(LehmerKError):
    pass


class NotPrime(LehmerKError):
    pass


class DegreeOne(LehmerKError):
    """Raised when an operation needs a quadratic field but got Q"""


class UnknownSuite(LehmerKError):
    pass


class ConfigError(LehmerKError):
    pass


class InternalInconsistency(LehmerKError):
    """A quotient that must be integral was not; points at a totient bug"""
    exit_code = 2
