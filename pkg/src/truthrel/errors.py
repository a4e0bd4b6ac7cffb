"""Exception hierarchy.

Each exception carries the process exit status the CLI reports for it.
"""


class TruthRelError(Exception):
    exit_code = 3


class ParseError(TruthRelError):
    """Malformed formula text; ``position`` is a character offset."""

    exit_code = 2

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ArityError(ParseError):
    pass


class NotPrenexError(TruthRelError):
    exit_code = 2


class FreeVariableError(TruthRelError):
    pass


class UndeclaredPredicateError(TruthRelError):
    pass


class ModelFormatError(TruthRelError):
    exit_code = 2


class EmptyUniverseError(TruthRelError):
    pass


class TooManyAtomsError(TruthRelError):
    pass


class CapExceededError(TruthRelError):
    pass
