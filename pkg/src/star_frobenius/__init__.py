"""Co-finiteness of Kleene closures and Frobenius lengths.

Decide whether the closure E* of a regular expression (or of an NFA's
language) misses only finitely many words over a declared alphabet, and
when it does, compute the length of the longest missing word together
with a witness.  Ships a 3SAT-to-regex instance generator and a
brute-force oracle for cross-validation.
"""

from .automata import (
    Dfa,
    Nfa,
    ReachabilityMatrix,
    TrimmedView,
    complement,
    dfa_accepts,
    glushkov,
    glushkov_star,
    is_infinite,
    longest_accepted,
    nfa_accepts,
    parse_nfa,
    star_closure,
    subset_construct,
    trim_useful,
    verify_rejected,
    window_accepts,
)
from .errors import (
    AlphabetMismatch,
    BadLengths,
    BudgetExceeded,
    Error,
    FormatError,
    GcdNotOne,
    InfiniteLanguage,
    InputError,
    NfaFormatError,
    NotThreeSat,
    RegexSyntaxError,
    SemanticError,
    TooLarge,
    UnknownSymbol,
    UnusedVariable,
)
from .frobenius import (
    CofiniteResult,
    NumericFrobenius,
    decide_cofinite,
    frobenius_of_finite_set,
    length_spectrum,
    numeric_frobenius,
    words_to_regex,
)
from .oracle import (
    DEFAULT_BUDGET,
    Matcher,
    MissingRow,
    OracleReport,
    OracleVerdict,
    bruteforce_cofinite,
    member_star_dp,
    regex_match,
)
from .reduction import (
    CnfInstance,
    LemmaVerdict,
    check_lemma,
    cnf_to_regex,
    format_dimacs,
    parse_dimacs,
    sat_bruteforce,
)
from .regex import (
    Alphabet,
    Concat,
    EmptySet,
    Epsilon,
    RegexAst,
    Star,
    Symbol,
    Union,
    alphabet_of,
    format_regex,
    parse_regex,
    symbol_length,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "BadLengths",
    "BudgetExceeded",
    "CnfInstance",
    "CofiniteResult",
    "Concat",
    "DEFAULT_BUDGET",
    "Dfa",
    "EmptySet",
    "Epsilon",
    "Error",
    "FormatError",
    "GcdNotOne",
    "InfiniteLanguage",
    "InputError",
    "LemmaVerdict",
    "Matcher",
    "MissingRow",
    "Nfa",
    "NfaFormatError",
    "NotThreeSat",
    "NumericFrobenius",
    "OracleReport",
    "OracleVerdict",
    "ReachabilityMatrix",
    "RegexAst",
    "RegexSyntaxError",
    "SemanticError",
    "Star",
    "Symbol",
    "TooLarge",
    "TrimmedView",
    "Union",
    "UnknownSymbol",
    "UnusedVariable",
    "alphabet_of",
    "bruteforce_cofinite",
    "check_lemma",
    "cnf_to_regex",
    "complement",
    "decide_cofinite",
    "dfa_accepts",
    "format_dimacs",
    "format_regex",
    "frobenius_of_finite_set",
    "glushkov",
    "glushkov_star",
    "is_infinite",
    "length_spectrum",
    "longest_accepted",
    "member_star_dp",
    "nfa_accepts",
    "numeric_frobenius",
    "parse_dimacs",
    "parse_nfa",
    "parse_regex",
    "regex_match",
    "sat_bruteforce",
    "star_closure",
    "subset_construct",
    "symbol_length",
    "trim_useful",
    "verify_rejected",
    "window_accepts",
    "words_to_regex",
]
