"""Exception types shared across the simulator."""


class StringliftError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class Unreachable(StringliftError):
    """The target knot cannot be reached from the source over the strings."""

    code = "unreachable"


class NonUniform(StringliftError):
    """Operation requires every string length to equal the lift step d."""

    code = "non_uniform"


class GenerationFailed(StringliftError):
    """Random generator exhausted its retry bound without a usable network."""

    code = "generation_failed"


class ParseError(StringliftError):
    """Malformed network, trace, or batch file."""

    code = "parse_error"

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)
