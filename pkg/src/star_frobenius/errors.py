"""Exception hierarchy shared by every module.

Two broad families matter to callers: ``InputError`` (the text handed to us
is malformed) and ``SemanticError`` (the input is well-formed but asks for
something undefined, such as a Frobenius number of a non-coprime set).
The CLI maps these families onto exit codes.
"""


class Error(Exception):
    """Base class for all errors raised by this package."""


class InputError(Error):
    """Malformed input text: regex, NFA file, DIMACS file, or word list."""


class SemanticError(Error):
    """Well-formed input that violates a semantic requirement."""


class RegexSyntaxError(InputError):
    """Regex text does not conform to the grammar; carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class NfaFormatError(InputError):
    """NFA description file is malformed; carries the line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FormatError(InputError):
    """DIMACS CNF text is malformed."""


class NotThreeSat(InputError):
    """A clause does not have exactly three usable literals."""


class UnusedVariable(InputError):
    """A declared variable occurs in no clause."""

    def __init__(self, index: int):
        super().__init__(f"variable {index} occurs in no clause")
        self.index = index


class BadLengths(InputError):
    """A word in a two-length set check has a length outside the pair."""


class TooLarge(InputError):
    """Instance exceeds the size guard of an exhaustive operation."""


class AlphabetMismatch(SemanticError):
    """A declared alphabet does not cover every symbol actually used."""


class UnknownSymbol(SemanticError):
    """A word contains a symbol outside the automaton's alphabet."""


class InfiniteLanguage(SemanticError):
    """A longest-word query was made against an infinite language."""


class GcdNotOne(SemanticError):
    """Frobenius number requested for integers with gcd greater than 1."""


class BudgetExceeded(Error):
    """Exhaustive enumeration would exceed the configured word budget."""
