"""Exception types shared across the package."""


class RmfError(Exception):
    """Base class for all errors raised by this library."""


class DomainError(RmfError, ValueError):
    """An input violates an operation's domain contract."""


class ParseError(RmfError, ValueError):
    """Malformed value-vector text.

    ``position`` is the character index (contiguous-digit form) or the
    token index (comma-separated form) of the offending input, or None
    when the problem is the overall length.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnsupportedArityError(DomainError):
    """Rotation machinery requires more than two arguments."""


class NotCompressibleError(DomainError):
    """The function is not constant on some orbit.

    ``representative`` names the first offending orbit.
    """

    def __init__(self, message, representative):
        super().__init__(message)
        self.representative = representative


class MatrixSizeError(RmfError):
    """A dense transform matrix would exceed the configured size cap."""
