"""Exception hierarchy shared by the library and the command line."""


class BohrError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(BohrError, ValueError):
    pass


class OutOfRangeError(BohrError, IndexError):
    pass


class DomainError(BohrError, ValueError):
    """An argument lies outside the region where a kernel is certified."""


class BracketError(BohrError):
    """The initial bracket does not straddle the requested root."""


class PrecisionError(BohrError):
    """Enclosures are too wide to decide the sign needed by the solver."""


class ResourceError(BohrError, MemoryError):
    pass
