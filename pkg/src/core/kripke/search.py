from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from functools import lru_cache
from typing import Optional

from ..errors import CapacityError, ModelError
from ..formula import Formula, LanguageTag, check_language, lookup_language, subformulas_of_all
from .models import KripkeModel, RoutleyModel, SearchVerdict, StarMode, world_names
from .semantics import compile_formulas, permutation_table, run_program


_logger = logging.getLogger(__name__)

DEFAULT_BIT_LIMIT = 20
COMPLETE_BOUND = 2


@lru_cache(maxsize=None)
def world_patterns(count: int) -> tuple[int, ...]:
    """변수 하나의 세계별 진리값 마스크. w1부터, 각 세계에서 참(1)을 먼저."""

    masks = []
    for bits in itertools.product((True, False), repeat=count):
        masks.append(sum(1 << idx for idx, bit in enumerate(bits) if bit))
    return tuple(masks)


@lru_cache(maxsize=None)
def involutions(count: int) -> tuple[tuple[int, ...], ...]:
    """세계 인덱스 위의 involution 전체 (치환 단어의 사전순)."""

    return tuple(
        perm
        for perm in itertools.permutations(range(count))
        if all(perm[perm[idx]] == idx for idx in range(count))
    )


def _iter_masks(count: int, variable_count: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(world_patterns(count), repeat=variable_count)


def _valuation(names: Sequence[str], masks: Sequence[int], count: int) -> dict[str, tuple[bool, ...]]:
    return {name: tuple(bool((mask >> idx) & 1) for idx in range(count)) for name, mask in zip(names, masks)}


def _guard(max_worlds: int, variable_count: int, bit_limit: int) -> None:
    if max_worlds < 1:
        raise ModelError(f"세계 수 한도는 1 이상이어야 합니다: {max_worlds}")
    bits = max_worlds * variable_count
    if bits > bit_limit:
        raise CapacityError(bits, bit_limit, "세계x변수 비트")


def default_bound(
    premises: Sequence[Formula],
    conclusion: Formula,
    lang: "str | LanguageTag",
    *,
    bit_limit: int = DEFAULT_BIT_LIMIT,
) -> int:
    """
    기본 세계 수 한도

    ∨가 없는 언어는 2 (완전). ∨가 있으면 |부분식|+1을 쓰되 비트 한도 안으로 줄인다.
    """
    tag = lookup_language(lang)
    if not tag.has_disjunction:
        return COMPLETE_BOUND
    formulas = [*premises, conclusion]
    wanted = len(subformulas_of_all(formulas)) + 1
    variable_count = max(1, len(compile_formulas(formulas).variables))
    ceiling = max(1, bit_limit // variable_count)
    if wanted > ceiling:
        _logger.warning(f"세계 수 한도 {wanted} -> {ceiling} (비트 한도 {bit_limit}, 변수 {variable_count}개)")
        return ceiling
    return wanted


def is_complete_bound(lang: "str | LanguageTag", bound: int) -> bool:
    return not lookup_language(lang).has_disjunction and bound >= COMPLETE_BOUND


def entails_discussive(
    premises: Sequence[Formula],
    conclusion: Formula,
    lang: "str | LanguageTag",
    max_worlds: Optional[int] = None,
    *,
    bit_limit: int = DEFAULT_BIT_LIMIT,
) -> SearchVerdict:
    """
    담론 귀결 ⊨_d 판정 (유한 모델 탐색)

    전제마다 참인 세계가 있고 결론이 어디서도 참이 아닌 모델을 세계 수 1..max_worlds에서 찾는다.
    반례는 열거 순서상 첫 모델이다.

    Raises:
        LanguageError: 식이 lang 밖의 연결사를 쓰는 경우
        CapacityError: max_worlds x 변수 수가 bit_limit을 넘는 경우
    """
    tag = lookup_language(lang)
    premise_list = list(premises)
    for f in [*premise_list, conclusion]:
        check_language(f, tag)

    bound = max_worlds if max_worlds is not None else default_bound(
        premise_list, conclusion, tag, bit_limit=bit_limit
    )
    program = compile_formulas([*premise_list, conclusion])
    names = program.variables
    _guard(bound, len(names), bit_limit)
    _logger.debug(f"kripke 탐색: 언어 {tag.name}, 세계 1..{bound}, 변수 {len(names)}개")

    premise_roots = program.roots[:-1]
    conclusion_root = program.roots[-1]
    checked = 0
    for count in range(1, bound + 1):
        full = (1 << count) - 1
        for masks in _iter_masks(count, len(names)):
            checked += 1
            out = run_program(program, masks, full)
            if out[conclusion_root] == 0 and all(out[root] for root in premise_roots):
                model = KripkeModel(world_names(count), _valuation(names, masks, count))
                _logger.debug(f"kripke 반례: 세계 {count}개 ({checked}번째 모델)")
                return SearchVerdict(
                    holds=False,
                    semantics="kripke",
                    premises=premise_list,
                    conclusion=conclusion,
                    bound=bound,
                    complete=is_complete_bound(tag, bound),
                    countermodel=model,
                    checked=checked,
                )
    return SearchVerdict(
        holds=True,
        semantics="kripke",
        premises=premise_list,
        conclusion=conclusion,
        bound=bound,
        complete=is_complete_bound(tag, bound),
        checked=checked,
    )


def _violates(mode: StarMode, premise: int, conclusion: int, full: int, base: int) -> bool:
    if mode is StarMode.FORALL:
        return premise == full and conclusion != full
    if mode is StarMode.BASE:
        return bool((premise >> base) & 1) and not (conclusion >> base) & 1
    return premise != 0 and conclusion == 0


def routley_entails(
    premise: Formula,
    conclusion: Formula,
    mode: "str | StarMode",
    max_worlds: int = COMPLETE_BOUND,
    *,
    bit_limit: int = DEFAULT_BIT_LIMIT,
) -> SearchVerdict:
    """
    Routley star 귀결 판정 (단일 전제)

    열거 순서: 세계 수, star 사상 (사전순), 기준 세계 (base 방식에서만), 값 할당.
    """
    star_mode = StarMode.from_value(mode)
    tag = lookup_language("L-FDE")
    check_language(premise, tag)
    check_language(conclusion, tag)

    program = compile_formulas([premise, conclusion])
    names = program.variables
    _guard(max_worlds, len(names), bit_limit)
    _logger.debug(f"routley 탐색: {star_mode.value}, 세계 1..{max_worlds}, 변수 {len(names)}개")

    premise_root, conclusion_root = program.roots
    checked = 0
    for count in range(1, max_worlds + 1):
        full = (1 << count) - 1
        worlds = world_names(count)
        for star in involutions(count):
            table = permutation_table(star)
            bases = range(count) if star_mode is StarMode.BASE else (0,)
            for base in bases:
                for masks in _iter_masks(count, len(names)):
                    checked += 1
                    out = run_program(program, masks, full, table)
                    if _violates(star_mode, out[premise_root], out[conclusion_root], full, base):
                        model = RoutleyModel(worlds, worlds[base], star, _valuation(names, masks, count))
                        return SearchVerdict(
                            holds=False,
                            semantics=f"routley:{star_mode.value}",
                            premises=[premise],
                            conclusion=conclusion,
                            bound=max_worlds,
                            complete=max_worlds >= COMPLETE_BOUND,
                            countermodel=model,
                            checked=checked,
                        )
    return SearchVerdict(
        holds=True,
        semantics=f"routley:{star_mode.value}",
        premises=[premise],
        conclusion=conclusion,
        bound=max_worlds,
        complete=max_worlds >= COMPLETE_BOUND,
        checked=checked,
    )
