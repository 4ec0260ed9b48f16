"""Exception hierarchy shared by every module."""


class KummerError(Exception):
    """Base class for errors raised by kummergen."""


class DomainError(KummerError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceError(KummerError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class ParseError(KummerError, ValueError):
    """Syntax or semantic error in an input expression.

    ``line`` and ``column`` are 1-based and point at the offending token.
    """

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")
        self.reason = message
