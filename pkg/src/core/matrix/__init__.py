from .evaluation import (
    DEFAULT_VARIABLE_LIMIT,
    entails_matrix,
    eval_formula,
    iter_valuations,
    project_four_to_three,
    tautology,
    truth_table,
)
from .facade import MatrixChecker
from .models import Matrix, MatrixVerdict, TruthValue, Valuation
from .registry import MATRIX_RAW, build_matrix, list_matrices, lookup_matrix

__all__ = [
    "build_matrix",
    "DEFAULT_VARIABLE_LIMIT",
    "entails_matrix",
    "eval_formula",
    "iter_valuations",
    "list_matrices",
    "lookup_matrix",
    "Matrix",
    "MATRIX_RAW",
    "MatrixChecker",
    "MatrixVerdict",
    "project_four_to_three",
    "tautology",
    "TruthValue",
    "truth_table",
    "Valuation",
]
