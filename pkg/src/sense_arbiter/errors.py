"""Exception types shared across the package."""

from __future__ import annotations


class SenseArbiterError(Exception):
    """Base class for every error this package raises on purpose."""


class FileFormatError(SenseArbiterError):
    """A data file failed validation.

    Carries the offending path and 1-based line number (0 means the
    problem concerns the file as a whole).
    """

    def __init__(self, path, line_no: int, reason: str):
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{self.path}:{line_no}: {reason}")


class MalformedLexicon(FileFormatError):
    pass


class MalformedBagFile(FileFormatError):
    pass


class MalformedStateFile(FileFormatError):
    pass


class MalformedGoldFile(FileFormatError):
    pass


class NoSenses(SenseArbiterError):
    """The keyword has no senses to decide between."""


class UnknownSense(SenseArbiterError):
    """A sense identifier does not exist for the given lemma."""


class KeywordAbsent(SenseArbiterError):
    """The target word does not occur in the sentence."""
