"""Exception types shared across the package."""


class LimitError(ValueError):
    """An input is structurally valid but exceeds an operation's size cap.

    Raised e.g. for graphs too large for graph6 (n > 62), for exhaustive
    subset enumeration (n > 32), or for the built-in labeled-graph search
    (n > 7).  CLI maps this to exit code 3.
    """


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
