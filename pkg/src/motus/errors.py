"""Exception hierarchy shared by every model module and the runner."""


class MotusError(Exception):
    """Base class for all errors raised by this package."""


class ModelError(MotusError, ValueError):
    """A model operation was called outside its domain."""


class GenusError(ModelError):
    pass


class BoundError(ModelError):
    pass


class NoSeparatorError(ModelError):
    pass


class SequenceError(ModelError):
    pass


class ClassError(ModelError):
    pass


class DomainError(ModelError):
    pass


class NoCollisionError(ModelError):
    pass


class RangeError(ModelError):
    pass


class ConfigError(MotusError):
    """Scenario text or command line could not be interpreted."""


class PlotError(MotusError):
    pass
