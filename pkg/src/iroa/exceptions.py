"""Exception hierarchy.

Parameter problems derive from ``ValueError`` and map to CLI exit code 2;
cap exceedances derive from :class:`CapExceeded` and map to exit code 3.
"""


class IroaError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(IroaError, ValueError):
    pass


class NotPrime(ParameterError):
    pass


class ReducibleModulus(ParameterError):
    pass


class UnsupportedOrder(ParameterError):
    pass


class FieldMismatch(ParameterError):
    pass


class DivisionByZero(ParameterError, ZeroDivisionError):
    pass


class DimensionMismatch(ParameterError):
    pass


class ZeroMatrix(ParameterError):
    pass


class DegenerateDual(ParameterError):
    pass


class ParamOutOfRange(ParameterError):
    pass


class DuplicatePoints(ParameterError):
    pass


class ZeroMultiplier(ParameterError):
    pass


class DuplicateRows(ParameterError):
    pass


class NotMDS(ParameterError):
    pass


class NotAnOA(ParameterError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class RhoNotExhaustive(ParameterError):
    pass


class CapExceeded(IroaError, RuntimeError):
    """An exhaustive computation would exceed its configured cap."""

    cap_name = "cap"

    def __init__(self, required, cap, what=""):
        self.required = required
        self.cap = cap
        msg = f"{self.cap_name} exceeded: {what} requires {required} > cap {cap}"
        super().__init__(msg)


class EnumerationCapExceeded(CapExceeded):
    cap_name = "enumeration cap"


class SubsetCapExceeded(CapExceeded):
    cap_name = "subset cap"


class PairCapExceeded(CapExceeded):
    cap_name = "pair cap"


class SpaceCapExceeded(CapExceeded):
    cap_name = "space cap"


class SearchCapExceeded(CapExceeded):
    cap_name = "search cap"
