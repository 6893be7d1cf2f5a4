from .language import LANGUAGES, UNRESTRICTED, LanguageTag, list_languages, lookup_language, require_connective
from .models import (
    BINARY_CONNECTIVES,
    UNARY_CONNECTIVES,
    Atom,
    Binary,
    Connective,
    Formula,
    Meta,
    Unary,
    conj,
    conj_l,
    conj_r,
    disj,
    dneg,
    imp,
    neg,
)
from .parser import parse, parse_schema
from .printer import print_formula
from .structure import (
    check_language,
    connectives_of,
    depth,
    metavariables,
    rename_connective,
    size,
    subformulas,
    subformulas_of_all,
    substitute,
    variables,
    variables_of_all,
)

__all__ = [
    "Atom",
    "BINARY_CONNECTIVES",
    "Binary",
    "check_language",
    "conj",
    "conj_l",
    "conj_r",
    "Connective",
    "connectives_of",
    "depth",
    "disj",
    "dneg",
    "Formula",
    "imp",
    "LANGUAGES",
    "LanguageTag",
    "list_languages",
    "lookup_language",
    "Meta",
    "metavariables",
    "neg",
    "parse",
    "parse_schema",
    "print_formula",
    "rename_connective",
    "require_connective",
    "size",
    "subformulas",
    "subformulas_of_all",
    "substitute",
    "UNARY_CONNECTIVES",
    "UNRESTRICTED",
    "Unary",
    "variables",
    "variables_of_all",
]
