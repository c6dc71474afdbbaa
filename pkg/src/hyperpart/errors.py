"""Exception types shared across the package."""


class HyperpartError(Exception):
    """Base class for all package errors."""


class ParameterError(HyperpartError, ValueError):
    """Raised when inputs violate an operation's preconditions."""


class BudgetExceeded(HyperpartError):
    """Raised when an exact search would exceed its configured budget."""


class NotMergeable(HyperpartError):
    """Raised by merge_smallest_parts when its precondition fails."""


class ParseError(HyperpartError):
    """Malformed input file. Carries the offending 1-indexed line number."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
