"""Exception types shared across the package.

Every domain error derives from :class:`ClusterKnotError` so the command line
front end can map them to exit status 1 in one place.
"""


class ClusterKnotError(Exception):
    """Base class for domain errors."""


class ZeroDenominator(ClusterKnotError, ZeroDivisionError):
    pass


class BindingToZero(ClusterKnotError, ZeroDivisionError):
    pass


class BraidSyntaxError(ClusterKnotError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GeneratorIndexError(ClusterKnotError, IndexError):
    pass


class StrandMismatch(ClusterKnotError, ValueError):
    pass


class StrandLimitExceeded(ClusterKnotError):
    pass


class LimitExceeded(ClusterKnotError):
    pass


class NonHalfIntegerPower(ClusterKnotError, ArithmeticError):
    pass


class PresetMismatch(ClusterKnotError, ValueError):
    pass


class FrozenDirection(ClusterKnotError, ValueError):
    pass


class IndexOutOfRange(ClusterKnotError, IndexError):
    pass
