from .facade import KripkeSearcher
from .models import Countermodel, KripkeModel, RoutleyModel, SearchVerdict, StarMode, world_names
from .search import (
    COMPLETE_BOUND,
    DEFAULT_BIT_LIMIT,
    default_bound,
    entails_discussive,
    involutions,
    is_complete_bound,
    routley_entails,
    world_patterns,
)
from .semantics import (
    belnap_decode,
    collapse_pattern,
    compile_formulas,
    fourvalued_decode,
    interpret,
    interpret_routley,
    run_program,
    worlds_pattern,
)

__all__ = [
    "belnap_decode",
    "collapse_pattern",
    "compile_formulas",
    "COMPLETE_BOUND",
    "Countermodel",
    "DEFAULT_BIT_LIMIT",
    "default_bound",
    "entails_discussive",
    "fourvalued_decode",
    "interpret",
    "interpret_routley",
    "involutions",
    "is_complete_bound",
    "KripkeModel",
    "KripkeSearcher",
    "routley_entails",
    "RoutleyModel",
    "run_program",
    "SearchVerdict",
    "StarMode",
    "world_names",
    "world_patterns",
    "worlds_pattern",
]
