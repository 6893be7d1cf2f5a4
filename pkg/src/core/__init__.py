# Core Module - formula syntax, semantics, proof systems, cross-checks
from .crosscheck import CrossChecker
from .errors import (
    CapacityError,
    DeductionError,
    DerivationFormatError,
    DiscussiveError,
    FormulaSyntaxError,
    LanguageError,
    ModelError,
    UnknownRegistryKeyError,
    UnmappedMetavariableError,
    ValuationError,
)
from .formula import parse, print_formula
from .hilbert import ProofChecker
from .kripke import KripkeSearcher
from .matrix import MatrixChecker

__all__ = [
    'CapacityError',
    'CrossChecker',
    'DeductionError',
    'DerivationFormatError',
    'DiscussiveError',
    'FormulaSyntaxError',
    'KripkeSearcher',
    'LanguageError',
    'MatrixChecker',
    'ModelError',
    'parse',
    'print_formula',
    'ProofChecker',
    'UnknownRegistryKeyError',
    'UnmappedMetavariableError',
    'ValuationError',
]
