"""Exception types shared across the workbench"""


class CellgapError(Exception):
    """Base class for all errors raised by cellgap"""


class ValidationError(CellgapError, ValueError):
    """Invalid parameters, parity violations or malformed input"""


class SizeMismatchError(ValidationError):
    """Operands live on different numbers of strands"""


class ConfigurationError(ValidationError):
    """A protocol or computation was set up in a degenerate way"""


class ResourceGuardError(CellgapError, RuntimeError):
    """A configured size guard was exceeded"""


class UnsupportedError(CellgapError, NotImplementedError):
    """The requested family/operation combination is not covered"""


class AmbiguityError(CellgapError, RuntimeError):
    """A maximum that should be unique is not"""


class ProtocolError(CellgapError, RuntimeError):
    """The two parties of a key exchange ended with different secrets"""

    def __init__(self, message: str, transcript=None):
        super().__init__(message)
        self.transcript = transcript
