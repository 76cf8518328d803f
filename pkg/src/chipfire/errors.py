"""Shared exception types."""


class ChipfireError(Exception):
    """Base class for all library errors."""


class GraphError(ChipfireError):
    """Invalid graph construction or graph-operation precondition."""


class FormatError(ChipfireError):
    """Malformed textual input.  ``offset`` is the byte offset of the fault."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class MalformedHeaderError(FormatError):
    pass


class VertexRangeError(FormatError):
    pass


class LengthMismatchError(FormatError):
    pass


class SingularMatrixError(ChipfireError):
    """Exact solve or inverse requested for a singular matrix."""


class CrossCheckFault(ChipfireError):
    """Two independent computation routes disagreed: an engine bug, not a
    property of the input.  CLI maps this to exit code 3."""


class WindowTooSmallError(ChipfireError):
    """Flow reached the guard ring of a finite flow-firing window."""


class ScriptError(ChipfireError):
    """Firing-script parse failure or failed intermediate assertion."""

    def __init__(self, message, step=None, expected=None, actual=None):
        super().__init__(message)
        self.step = step
        self.expected = expected
        self.actual = actual
