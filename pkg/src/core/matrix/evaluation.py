from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence

from ..errors import CapacityError, LanguageError, ValuationError
from ..formula import Atom, Binary, Formula, Unary, check_language, variables, variables_of_all
from .models import Matrix, MatrixVerdict, TruthValue, Valuation


_logger = logging.getLogger(__name__)

DEFAULT_VARIABLE_LIMIT = 16


def _evaluate(m: Matrix, assignment: Mapping[str, TruthValue], f: Formula) -> TruthValue:
    if isinstance(f, Atom):
        return assignment[f.name]
    if isinstance(f, Unary):
        return m.unary[f.conn][_evaluate(m, assignment, f.child)]
    if isinstance(f, Binary):
        return m.binary[f.conn][(_evaluate(m, assignment, f.left), _evaluate(m, assignment, f.right))]
    raise LanguageError(f"메타변수 {f.name}는 평가할 수 없습니다")


def _check_formulas(m: Matrix, formulas: Sequence[Formula]) -> None:
    for f in formulas:
        try:
            check_language(f, m.language)
        except LanguageError as e:
            raise LanguageError(f"{m.matrix_id}: {e}", token=e.token) from None


def eval_formula(m: Matrix, valuation: "Valuation | Mapping[str, TruthValue]", f: Formula) -> TruthValue:
    """
    값 할당의 준동형 확장으로 f의 진리값을 계산

    Raises:
        LanguageError: f가 행렬의 언어 밖의 연결사를 쓰는 경우
        ValuationError: f의 변수가 할당에 없거나 값이 행렬 밖인 경우
    """
    _check_formulas(m, [f])
    assignment = valuation.as_dict() if isinstance(valuation, Valuation) else dict(valuation)
    for name in variables(f):
        if name not in assignment:
            raise ValuationError(f"변수 {name}의 값이 할당되지 않았습니다")
        if assignment[name] not in m.values:
            raise ValuationError(f"{m.matrix_id}에 없는 진리값: {name}={assignment[name].value}")
    return _evaluate(m, assignment, f)


def iter_valuations(m: Matrix, names: Sequence[str]) -> Iterator[dict[str, TruthValue]]:
    """변수 이름순, 값은 행렬 순서 (1, i, j, 0 / t, b, n, f)로 열거."""

    ordered = sorted(names)
    for combo in itertools.product(m.values, repeat=len(ordered)):
        yield dict(zip(ordered, combo))


def _guard(names: Sequence[str], limit: int) -> None:
    if len(names) > limit:
        raise CapacityError(len(names), limit, "행렬 변수 수")


def entails_matrix(
    m: Matrix,
    premises: Sequence[Formula],
    conclusion: Formula,
    *,
    variable_limit: int = DEFAULT_VARIABLE_LIMIT,
) -> MatrixVerdict:
    """지정값 보존으로 정의된 귀결을 전수 열거로 판정. 실패 시 열거상 첫 반례를 돌려준다."""

    premise_list = list(premises)
    _check_formulas(m, [*premise_list, conclusion])
    names = variables_of_all([*premise_list, conclusion])
    _guard(names, variable_limit)

    checked = 0
    for assignment in iter_valuations(m, names):
        checked += 1
        if not m.is_designated(_evaluate(m, assignment, conclusion)) and all(
            m.is_designated(_evaluate(m, assignment, p)) for p in premise_list
        ):
            _logger.debug(f"{m.matrix_id}: 반례 발견 ({checked}번째 할당)")
            return MatrixVerdict(
                holds=False,
                matrix_id=m.matrix_id,
                premises=premise_list,
                conclusion=conclusion,
                variables=names,
                countermodel=Valuation.of(assignment),
                checked=checked,
            )
    return MatrixVerdict(
        holds=True,
        matrix_id=m.matrix_id,
        premises=premise_list,
        conclusion=conclusion,
        variables=names,
        checked=checked,
    )


def tautology(m: Matrix, f: Formula, *, variable_limit: int = DEFAULT_VARIABLE_LIMIT) -> MatrixVerdict:
    return entails_matrix(m, [], f, variable_limit=variable_limit)


def truth_table(
    m: Matrix,
    f: Formula,
    *,
    variable_limit: int = DEFAULT_VARIABLE_LIMIT,
) -> list[tuple[Valuation, TruthValue]]:
    _check_formulas(m, [f])
    names = variables(f)
    _guard(names, variable_limit)
    return [(Valuation.of(a), _evaluate(m, a, f)) for a in iter_valuations(m, names)]


def project_four_to_three(value: TruthValue) -> TruthValue:
    """네 값의 중간값 i, j를 i로 합친다."""

    return TruthValue.I if value is TruthValue.J else value

