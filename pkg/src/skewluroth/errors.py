"""Exception hierarchy shared by all modules."""


class SkewLurothError(Exception):
    """Base class for library errors."""


class PreconditionError(SkewLurothError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class ConfigMismatch(PreconditionError):
    """Operands live in different coefficient domains or twist configurations."""


class DegreeCapExceeded(PreconditionError):
    """An intermediate polynomial exceeded the active degree cap."""


class NotMobiusError(PreconditionError):
    """tau(f) is not a Mobius transform of f."""


class CenterFormulaError(PreconditionError):
    """The center formula for C(v) does not apply to the given v."""
