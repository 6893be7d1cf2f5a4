from .catalog import SYSTEM_RAW, build_system, list_system, list_systems
from .checker import check_derivation, find_schema, match_schema
from .corpus import CorpusEntry, derivation_corpus
from .deduction import deduction_transform, self_implication
from .facade import ProofChecker
from .io import load_derivation, parse_derivation, render_derivation, save_derivation
from .models import (
    AxiomSchema,
    AxiomSystem,
    Derivation,
    DerivationLine,
    DerivationVerdict,
    FailureReason,
    Justification,
    JustificationKind,
)

__all__ = [
    "AxiomSchema",
    "AxiomSystem",
    "build_system",
    "check_derivation",
    "CorpusEntry",
    "deduction_transform",
    "Derivation",
    "derivation_corpus",
    "DerivationLine",
    "DerivationVerdict",
    "FailureReason",
    "find_schema",
    "Justification",
    "JustificationKind",
    "list_system",
    "list_systems",
    "load_derivation",
    "match_schema",
    "parse_derivation",
    "ProofChecker",
    "render_derivation",
    "save_derivation",
    "self_implication",
    "SYSTEM_RAW",
]
