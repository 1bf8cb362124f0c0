"""Exception types raised by the library."""


class SimultaneityError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolation(SimultaneityError, ValueError):
    pass


class DegenerateInput(PreconditionViolation):
    pass


class IrrationalRadius(PreconditionViolation):
    """An exact map needed a rational spatial distance from the worldline."""


class IrrationalInterval(PreconditionViolation):
    """A timelike separation whose proper time is not rational."""


class IncommensurableRadicands(SimultaneityError, ArithmeticError):
    """Arithmetic between a + b*sqrt(d) and a' + b'*sqrt(d') with d != d'."""


class ViewportError(SimultaneityError, ValueError):
    pass


class SchemaError(SimultaneityError, ValueError):
    """Malformed JSON input. ``field`` names the offending member."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
