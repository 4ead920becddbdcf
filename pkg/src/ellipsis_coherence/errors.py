"""Exception hierarchy shared by all modules.

Resolution failures double as infelicity reasons: the harness reports the
class name of the exception that blocked a reading.
"""


class EllipsisError(Exception):
    """Base class for every error raised by this package."""

    @property
    def reason(self):
        return type(self).__name__


# lambda terms
class TypeMismatch(EllipsisError):
    pass


class TermSyntaxError(EllipsisError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


# trees and lexicon
class TreeSyntaxError(EllipsisError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownWord(EllipsisError):
    def __init__(self, word, category=None):
        where = f" as {category}" if category else ""
        super().__init__(f"unknown word {word!r}{where}")
        self.word = word


class TypeClash(EllipsisError):
    pass


# structural transforms
class NoMatch(EllipsisError):
    pass


class AmbiguousRemnant(EllipsisError):
    pass


class RemnantMismatch(EllipsisError):
    pass


class FormMismatch(EllipsisError):
    pass


class UnsuitableAntecedent(EllipsisError):
    pass


# resolution
class NoVPAntecedent(EllipsisError):
    pass


class NoSourceSyntax(EllipsisError):
    pass


class NoSolution(EllipsisError):
    pass


# discourse inference
class MissingSemantics(EllipsisError):
    pass


class UnknownConjunction(EllipsisError):
    pass


class FamilyError(EllipsisError, ValueError):
    """A checker was handed a relation from the other inference family."""


class InputError(EllipsisError):
    """Malformed corpus, lexicon or knowledge-base file."""
