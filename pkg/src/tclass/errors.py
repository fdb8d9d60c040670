"""Exception hierarchy shared by every backend."""


class IdealError(Exception):
    pass


class DomainMismatch(IdealError):
    pass


class Unrepresentable(IdealError):
    """The result exists mathematically but the backend has no exact encoding for it."""


class NotFullRank(IdealError):
    pass


class ZeroScalar(IdealError):
    pass


class InvalidDomain(IdealError, ValueError):
    pass


class NotTIdeal(IdealError):
    pass


class BoundExceeded(IdealError):
    pass


class WrongDimension(IdealError):
    pass


class SearchInconclusive(IdealError):
    pass


class ArithmeticBug(IdealError):
    """Raised when an internal consistency check fails; never expected in a correct build."""


class RingCheckFailed(ArithmeticBug):
    pass


class WitnessCheckFailed(ArithmeticBug):
    pass
