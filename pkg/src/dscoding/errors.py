"""Exception types shared across the package."""


class DscodingError(Exception):
    """Base class for every error this package raises deliberately."""


# -- coding algebra ----------------------------------------------------------

class NotInvertible(DscodingError):
    """The argument has no multiplicative inverse for the given modulus."""


class OutOfRange(DscodingError):
    """A 1-based position lies outside the coded word."""


class InvalidCode(DscodingError):
    """A 4-tuple violates the structural code invariants."""


class CannotExtend(DscodingError):
    """Appending the letter would leave the balanced language."""


class Unary(DscodingError):
    """The word is empty or a power of a single letter."""


class EmptyInput(DscodingError):
    """The empty word has no coding."""


# -- oracles -----------------------------------------------------------------

class InvalidSlope(DscodingError):
    """Height/length pair is not a valid Christoffel slope."""


class NotChristoffel(DscodingError):
    """The word is not a lower Christoffel word."""


class BoundExceeded(DscodingError):
    """An exhaustive sweep was requested above the configured bound."""


# -- serialization -----------------------------------------------------------

class BadCharacter(DscodingError):
    """A word stream contains something other than '0', '1' or whitespace."""

    def __init__(self, position: int):
        super().__init__(f"invalid character at position {position}")
        self.position = position


class MalformedBlock(DscodingError):
    """A raw bit block has inconsistent length or nonzero padding."""


class BadHeader(DscodingError):
    """Text coding stream does not start with the expected header line."""


class BadCount(DscodingError):
    """The factor count line is not a nonnegative integer."""


class BadTuple(DscodingError):
    """A tuple line of the text format is malformed."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolation(DscodingError):
    """A parsed code fails the structural invariants."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class BadMagic(DscodingError):
    """Binary coding stream does not start with the DSC1 magic."""


class TruncatedStream(DscodingError):
    """Binary coding stream ends in the middle of a value."""


class OverlongEncoding(DscodingError):
    """An LEB128 value carries a redundant trailing zero group."""


class TrailingData(DscodingError):
    """Bytes remain after the declared factors were read."""
