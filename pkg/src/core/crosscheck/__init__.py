from .deciders import SemanticsSpec, Verdict, decide
from .facade import CrossChecker
from .generator import GOLDEN_GAMMA, GeneratorConfig, SplitMix64, gen_formula, variable_pool
from .harness import crosscheck, draw_sample, noncontainment_check, run_sample
from .models import (
    CrosscheckPair,
    CrosscheckReport,
    Disagreement,
    NoncontainmentFact,
    NoncontainmentReport,
    SampleOutcome,
)
from .pairs import PAIR_RAW, list_pairs, lookup_pair
from .reporting import REPORT_FORMATS, export_report

__all__ = [
    "CrossChecker",
    "crosscheck",
    "CrosscheckPair",
    "CrosscheckReport",
    "decide",
    "Disagreement",
    "draw_sample",
    "export_report",
    "gen_formula",
    "GeneratorConfig",
    "GOLDEN_GAMMA",
    "list_pairs",
    "lookup_pair",
    "noncontainment_check",
    "NoncontainmentFact",
    "NoncontainmentReport",
    "PAIR_RAW",
    "REPORT_FORMATS",
    "run_sample",
    "SampleOutcome",
    "SemanticsSpec",
    "SplitMix64",
    "variable_pool",
    "Verdict",
]
