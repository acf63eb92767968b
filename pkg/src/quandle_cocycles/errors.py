"""Exception types raised by the library."""


class QuandleError(ValueError):
    """Base class for invalid mathematical input."""


class MalformedTableError(QuandleError):
    pass


class InvalidSizeError(QuandleError):
    pass


class NotFiniteError(QuandleError):
    pass


class ClosureError(QuandleError):
    """A subset of a group is not closed under conjugation."""


class DynamicalCocycleError(QuandleError):
    def __init__(self, message, condition=None, witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class BraidParseError(QuandleError):
    pass


class TooManyColoringsError(QuandleError):
    pass


class UnsupportedModulusError(QuandleError):
    pass


class CocycleError(QuandleError):
    """A cochain fails a cocycle condition or has the wrong shape."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConventionError(QuandleError):
    pass
