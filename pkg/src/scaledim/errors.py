"""Exception hierarchy shared by every module."""


class ScaledimError(Exception):
    """Base class for all library errors."""


class StructureError(ScaledimError, ValueError):
    """Malformed context, out-of-range index, or mismatched object lists."""


class CapacityError(ScaledimError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, message, count):
        super().__init__(message)
        self.count = count


class ConfigurationError(ScaledimError, ValueError):
    """A scale kind was requested that the pre-scaling cannot support."""


class ScalingError(ScaledimError, ValueError):
    """A many-valued entry cannot be interpreted by its scale."""

    def __init__(self, message, obj=None, attribute=None, value=None):
        super().__init__(message)
        self.obj = obj
        self.attribute = attribute
        self.value = value


class PreconditionError(ScaledimError, ValueError):
    """An operation was called on input violating its stated precondition."""


class SpecError(ScaledimError, ValueError):
    """A user-supplied specification (view, extent family, cover) is invalid."""


class ParseError(ScaledimError, ValueError):
    """Input file could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
