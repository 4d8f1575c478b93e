"""Exception hierarchy shared by every module of the package."""


class BurntError(Exception):
    """Base class for all errors raised by :mod:`burnt`."""


class InvalidDimension(BurntError, ValueError):
    pass


class InvalidGenerator(BurntError, ValueError):
    """A reversal index outside ``[1, n]`` (``r_0`` included)."""


class DimensionMismatch(BurntError, ValueError):
    pass


class ParseError(BurntError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceLimit(BurntError):
    """Requested materialization or search exceeds the configured cap."""


class UnreachableLength(BurntError, ValueError):
    """No cycle of the requested length exists in the graph."""


class ConstructionError(BurntError, RuntimeError):
    """A constructed word failed its own validation.

    Carries the offending word and the walk position where the failure was
    detected, when known.
    """

    def __init__(self, message, word=None, position=None):
        super().__init__(message)
        self.word = word
        self.position = position


class NotCanonical(BurntError, ValueError):
    pass


class CorpusError(BurntError):
    pass


class MissingLength(CorpusError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""
