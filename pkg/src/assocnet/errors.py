"""Exception hierarchy shared across the toolkit.

Exit-code mapping used by the CLI: :class:`InputError` (and subclasses)
terminate with code 1, :class:`UndefinedResultError` with code 2.
"""


class AssocNetError(Exception):
    """Base class for all toolkit errors."""


class InputError(AssocNetError):
    """Invalid argument, file, or network state supplied by the caller."""


class ParseError(InputError):
    """Malformed row in a norms or ratings file. Carries file position."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}: "
        elif where:
            where = f"{where} "
        super().__init__(f"{where}{message}")


class UndefinedResultError(AssocNetError):
    """A statistic is undefined for the given input (e.g. no reachable pair)."""
