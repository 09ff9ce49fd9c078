"""Exception and warning types raised across the package."""


class MonopoleSpectraError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(MonopoleSpectraError, ValueError):
    pass


class DomainError(MonopoleSpectraError, ValueError):
    pass


class ToleranceNotReachedError(MonopoleSpectraError, ArithmeticError):
    pass


class NonConvergenceError(MonopoleSpectraError, ArithmeticError):
    pass


class NoBoundStateError(MonopoleSpectraError):
    """The net 1/r tail is not attractive, so no negative-energy level exists."""


class InadmissibleStateError(MonopoleSpectraError):
    """A screened level whose decay constant would not be positive."""


class NoMinimumError(MonopoleSpectraError):
    pass


class InsufficientBoundStatesError(MonopoleSpectraError):
    pass


class ConfigError(MonopoleSpectraError):
    pass


class GridTooCoarseWarning(UserWarning):
    pass
