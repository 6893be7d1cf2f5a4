from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence

from ..formula import Formula
from .evaluation import DEFAULT_VARIABLE_LIMIT, entails_matrix, eval_formula, tautology, truth_table
from .models import Matrix, MatrixVerdict, TruthValue, Valuation
from .registry import list_matrices, lookup_matrix


class MatrixChecker:
    """
    다치 행렬 의미론 판정기
    등록된 행렬 조회, 평가, 귀결/항진식 판정
    """

    def __init__(self, variable_limit: int = DEFAULT_VARIABLE_LIMIT) -> None:
        self._logger = logging.getLogger(__name__)
        self._variable_limit = max(1, int(variable_limit))

    @property
    def variable_limit(self) -> int:
        return self._variable_limit

    def lookup(self, matrix_id: str) -> Matrix:
        return lookup_matrix(matrix_id)

    def list_matrices(self) -> list[Matrix]:
        return list_matrices()

    def evaluate(self, matrix_id: str, assignment: Mapping[str, TruthValue], f: Formula) -> TruthValue:
        return eval_formula(lookup_matrix(matrix_id), Valuation.of(assignment), f)

    def entails(self, matrix_id: str, premises: Sequence[Formula], conclusion: Formula) -> MatrixVerdict:
        verdict = entails_matrix(
            lookup_matrix(matrix_id),
            premises,
            conclusion,
            variable_limit=self._variable_limit,
        )
        self._logger.debug(f"{matrix_id}: {verdict.label} ({verdict.checked}개 할당 검사)")
        return verdict

    def tautology(self, matrix_id: str, f: Formula) -> MatrixVerdict:
        return tautology(lookup_matrix(matrix_id), f, variable_limit=self._variable_limit)

    def truth_table(self, matrix_id: str, f: Formula) -> list[tuple[Valuation, TruthValue]]:
        return truth_table(lookup_matrix(matrix_id), f, variable_limit=self._variable_limit)
