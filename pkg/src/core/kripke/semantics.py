"""
Kripke Semantics Module
세계별 진리 조건 (비트마스크 평가)

진리값 벡터는 정수 비트마스크로 다룬다: i번째 비트가 worlds[i]에서의 진리값.

Author: Discussive Lab
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Optional

from ..errors import LanguageError, ModelError, ValuationError
from ..formula import Atom, Binary, Connective, Formula, Unary, subformulas_of_all
from ..matrix import TruthValue
from .models import KripkeModel, RoutleyModel


_ROUTLEY_CONNECTIVES = frozenset({Connective.NEG, Connective.CONJ, Connective.DISJ})


@dataclass(frozen=True)
class Program:
    """부분식을 후위 순서로 펼친 평가 순서. 원자는 (None, 변수 위치, -1)."""

    steps: tuple[tuple[Optional[Connective], int, int], ...]
    roots: tuple[int, ...]
    variables: tuple[str, ...]


def compile_formulas(formulas: Sequence[Formula]) -> Program:
    nodes = subformulas_of_all(formulas)
    position = {node: idx for idx, node in enumerate(nodes)}
    names = sorted({node.name for node in nodes if isinstance(node, Atom)})
    var_pos = {name: idx for idx, name in enumerate(names)}
    steps: list[tuple[Optional[Connective], int, int]] = []
    for node in nodes:
        if isinstance(node, Atom):
            steps.append((None, var_pos[node.name], -1))
        elif isinstance(node, Unary):
            steps.append((node.conn, position[node.child], -1))
        elif isinstance(node, Binary):
            steps.append((node.conn, position[node.left], position[node.right]))
        else:
            raise LanguageError(f"메타변수 {node.name}는 평가할 수 없습니다")
    return Program(tuple(steps), tuple(position[f] for f in formulas), tuple(names))


def permutation_table(star: Sequence[int]) -> list[int]:
    """mask -> star로 옮긴 mask. 결과의 i번째 비트 = 원래 star[i]번째 비트."""

    count = len(star)
    table = []
    for mask in range(1 << count):
        moved = 0
        for idx, target in enumerate(star):
            if (mask >> target) & 1:
                moved |= 1 << idx
        table.append(moved)
    return table


def run_program(
    program: Program,
    masks: Sequence[int],
    full: int,
    star_table: Optional[Sequence[int]] = None,
) -> list[int]:
    """
    변수 마스크로 모든 부분식의 진리 벡터를 계산

    star_table이 주어지면 ∼는 Routley 조건 (w*에서 참이 아님)으로 해석한다.
    """
    out = [0] * len(program.steps)
    for idx, (conn, a, b) in enumerate(program.steps):
        if conn is None:
            out[idx] = masks[a]
            continue
        x = out[a]
        if conn is Connective.NEG:
            out[idx] = full ^ (star_table[x] if star_table is not None else x)
        elif conn is Connective.DNEG:
            out[idx] = full if x != full else 0
        else:
            y = out[b]
            if conn is Connective.IMP:
                out[idx] = full if x == 0 else y
            elif conn is Connective.CONJ_R:
                out[idx] = x if y else 0
            elif conn is Connective.CONJ_L:
                out[idx] = y if x else 0
            elif conn is Connective.CONJ:
                out[idx] = x & y
            else:
                out[idx] = x | y
    return out


def _model_masks(program: Program, valuation: Mapping[str, tuple[bool, ...]]) -> list[int]:
    masks = []
    for name in program.variables:
        if name not in valuation:
            raise ValuationError(f"변수 {name}의 값이 할당되지 않았습니다")
        masks.append(sum(1 << idx for idx, bit in enumerate(valuation[name]) if bit))
    return masks


def pattern_mask(model: KripkeModel, f: Formula) -> int:
    program = compile_formulas([f])
    full = (1 << len(model.worlds)) - 1
    out = run_program(program, _model_masks(program, model.valuation), full)
    return out[program.roots[0]]


def worlds_pattern(model: KripkeModel, f: Formula) -> tuple[bool, ...]:
    """worlds 순서의 진리값 벡터."""

    mask = pattern_mask(model, f)
    return tuple(bool((mask >> idx) & 1) for idx in range(len(model.worlds)))


def interpret(model: KripkeModel, world: str, f: Formula) -> bool:
    """
    세계 world에서 f의 진리값

    Raises:
        ValuationError: 알 수 없는 세계 또는 할당되지 않은 변수
    """
    idx = model.world_index(world)
    return bool((pattern_mask(model, f) >> idx) & 1)


def collapse_pattern(pattern: Sequence[bool]) -> TruthValue:
    """모두 참 -> 1, 일부만 참 -> i, 모두 거짓 -> 0."""

    if all(pattern):
        return TruthValue.ONE
    if any(pattern):
        return TruthValue.I
    return TruthValue.ZERO


_FOUR_VALUED = {
    (True, True): TruthValue.ONE,
    (True, False): TruthValue.I,
    (False, True): TruthValue.J,
    (False, False): TruthValue.ZERO,
}


def fourvalued_decode(model: KripkeModel, f: Formula) -> TruthValue:
    """두 세계 모델의 (w1, w2) 진리 패턴을 1/i/j/0으로 읽는다."""

    if len(model.worlds) != 2:
        raise ModelError(f"4치 해석은 두 세계 모델에서만 정의됩니다 (세계 수 {len(model.worlds)})")
    return _FOUR_VALUED[worlds_pattern(model, f)]


def routley_mask(model: RoutleyModel, f: Formula) -> int:
    program = compile_formulas([f])
    foreign = {conn for conn, _, _ in program.steps if conn is not None} - _ROUTLEY_CONNECTIVES
    if foreign:
        symbols = sorted(c.value for c in foreign)
        raise LanguageError(f"Routley 모델은 ~, &, | 만 해석합니다: {', '.join(symbols)}", token=symbols[0])
    full = (1 << len(model.worlds)) - 1
    masks = _model_masks(program, model.valuation)
    out = run_program(program, masks, full, permutation_table(model.star))
    return out[program.roots[0]]


def interpret_routley(model: RoutleyModel, world: str, f: Formula) -> bool:
    """Routley 진리 조건: I(w, ∼A)=1 iff I(w*, A)≠1, ∧/∨는 세계별 고전 조건."""

    idx = model.world_index(world)
    return bool((routley_mask(model, f) >> idx) & 1)


_BELNAP = {
    (True, True): TruthValue.T,
    (True, False): TruthValue.B,
    (False, True): TruthValue.N,
    (False, False): TruthValue.F,
}


def belnap_decode(model: RoutleyModel, f: Formula) -> TruthValue:
    """기준 세계 g와 g*에서의 진리값 쌍을 Belnap-Dunn 값으로 읽는다."""

    mask = routley_mask(model, f)
    g = model.base_index
    return _BELNAP[(bool((mask >> g) & 1), bool((mask >> model.star[g]) & 1))]
