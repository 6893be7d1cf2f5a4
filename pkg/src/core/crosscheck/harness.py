from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Optional, Union

from ..errors import CapacityError, LanguageError
from ..formula import Formula, imp, lookup_language, parse
from ..kripke import DEFAULT_BIT_LIMIT, entails_discussive
from ..matrix import DEFAULT_VARIABLE_LIMIT, TruthValue, lookup_matrix, tautology
from .deciders import decide
from .generator import MASK64, GeneratorConfig, SplitMix64, gen_formula
from .models import (
    CrosscheckPair,
    CrosscheckReport,
    Disagreement,
    NoncontainmentFact,
    NoncontainmentReport,
    SampleOutcome,
)
from .pairs import lookup_pair


_logger = logging.getLogger(__name__)

# 전제 개수 선택용 스트림을 식 스트림과 분리한다
_PREMISE_COUNT_SALT = 0xD1B54A32D192ED03


def draw_sample(
    cfg: GeneratorConfig,
    index: int,
    *,
    max_premises: int = 2,
    min_premises: int = 0,
) -> tuple[list[Formula], Formula]:
    """
    index번째 표본 (전제 목록, 결론)

    전제 개수 k는 (seed, index)에서, 식은 stride = max_premises + 1 간격의 gen_formula 흐름에서 뽑는다.
    """
    upper = max(max_premises, min_premises)
    rng = SplitMix64(cfg.seed ^ (((index + 1) * _PREMISE_COUNT_SALT) & MASK64))
    count = min_premises + rng.below(upper - min_premises + 1)
    stride = max(upper, 1) + 1
    premises = [gen_formula(cfg, stride * index + offset) for offset in range(count)]
    conclusion = gen_formula(cfg, stride * index + count)
    return premises, conclusion


def _witness(verdict) -> str:
    return verdict.to_text() if not verdict.holds else ""


def run_sample(
    pair: CrosscheckPair,
    cfg: GeneratorConfig,
    index: int,
    *,
    max_premises: int = 2,
    bit_limit: int = DEFAULT_BIT_LIMIT,
    variable_limit: int = DEFAULT_VARIABLE_LIMIT,
) -> SampleOutcome:
    if pair.single_premise:
        premises, conclusion = draw_sample(cfg, index, max_premises=1, min_premises=1)
    else:
        premises, conclusion = draw_sample(cfg, index, max_premises=max_premises, min_premises=pair.min_premises)
    outcome = SampleOutcome(index=index, premises=premises, conclusion=conclusion)

    right_premises: list[Formula] = premises
    right_conclusion = conclusion
    if pair.deduction:
        right_premises = premises[:-1]
        right_conclusion = imp(premises[-1], conclusion)

    try:
        left = decide(pair.left, premises, conclusion, pair.language, bit_limit=bit_limit, variable_limit=variable_limit)
        right = decide(
            pair.right,
            right_premises,
            right_conclusion,
            pair.language,
            bit_limit=bit_limit,
            variable_limit=variable_limit,
        )
    except CapacityError as e:
        outcome.skipped_reason = str(e)
        _logger.info(f"{pair.name} 표본 {index} 건너뜀: {e}")
        return outcome

    outcome.left_holds = left.holds
    outcome.right_holds = right.holds
    outcome.left_label = left.label
    outcome.right_label = right.label
    outcome.witness = _witness(left) or _witness(right)
    return outcome


def crosscheck(
    pair: Union[str, CrosscheckPair],
    cfg: Optional[GeneratorConfig] = None,
    samples: int = 1000,
    *,
    max_premises: int = 2,
    workers: int = 1,
    bit_limit: int = DEFAULT_BIT_LIMIT,
    variable_limit: int = DEFAULT_VARIABLE_LIMIT,
) -> CrosscheckReport:
    """
    두 판정기를 같은 표본에 돌려 일치 여부를 집계

    workers > 1이면 스레드 풀에서 돌리되 보고서는 표본 순서를 유지한다.

    Raises:
        LanguageError: 생성기 언어가 비교쌍의 언어 밖인 경우
    """
    resolved = pair if isinstance(pair, CrosscheckPair) else lookup_pair(pair)
    target = lookup_language(resolved.language)
    if cfg is None:
        cfg = GeneratorConfig(language=target)
    elif not cfg.language.connectives <= target.connectives:
        raise LanguageError(f"생성기 언어 {cfg.language.name}는 비교쌍 {resolved.name}의 언어 {target.name}에 포함되지 않습니다")

    count = max(0, int(samples))
    outcomes: list[Optional[SampleOutcome]] = [None] * count

    def job(index: int) -> SampleOutcome:
        return run_sample(
            resolved,
            cfg,
            index,
            max_premises=max_premises,
            bit_limit=bit_limit,
            variable_limit=variable_limit,
        )

    if workers > 1 and count > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_idx = {executor.submit(job, idx): idx for idx in range(count)}
            for future in as_completed(future_to_idx):
                outcomes[future_to_idx[future]] = future.result()
    else:
        for idx in range(count):
            outcomes[idx] = job(idx)

    report = CrosscheckReport(
        pair_name=resolved.name,
        seed=cfg.seed,
        requested=count,
        left=resolved.left,
        right=resolved.right,
        language=resolved.language,
    )
    for outcome in outcomes:
        assert outcome is not None
        if outcome.skipped:
            report.skipped.append(outcome.index)
            continue
        report.samples += 1
        if outcome.agrees:
            report.agreements += 1
        else:
            _logger.warning(f"{resolved.name} 불일치: 표본 {outcome.index} ({outcome.left_label} / {outcome.right_label})")
            report.disagreements.append(
                Disagreement(
                    sample_index=outcome.index,
                    premises=outcome.premises,
                    conclusion=outcome.conclusion,
                    left_verdict=outcome.left_label,
                    right_verdict=outcome.right_label,
                    witness=outcome.witness,
                )
            )
    _logger.debug(f"{resolved.name}: {report.agreements}/{report.samples} 일치, {len(report.skipped)} 건너뜀")
    return report


def noncontainment_check(*, bit_limit: int = DEFAULT_BIT_LIMIT) -> NoncontainmentReport:
    """
    ∨를 더한 두 확장이 서로를 포함하지 않음을 확인

    (a) ~(p | ~p) -> q 는 ⊨_d 에서 성립하지만 D2P-3 항진식이 아니다.
    (b) Ax16 인스턴스는 D2P-3 항진식이지만 두 세계 Kripke 모델에서 실패한다.
    """
    d2p = lookup_matrix("D2P-3")
    report = NoncontainmentReport()

    explosion = parse("~(p | ~p) -> q", "Lr")
    kripke_a = entails_discussive([], explosion, "Lr", bit_limit=bit_limit)
    matrix_a = tautology(d2p, explosion)
    expected_a = {"p": TruthValue.I, "q": TruthValue.ZERO}
    confirmed_a = (
        kripke_a.holds
        and not matrix_a.holds
        and matrix_a.countermodel is not None
        and matrix_a.countermodel.as_dict() == expected_a
    )
    report.facts.append(
        NoncontainmentFact(
            name="a",
            description="discussive consequence proves a formula the three-valued expansion rejects",
            formula=explosion,
            kripke_label=kripke_a.label,
            matrix_label=matrix_a.label,
            witness=matrix_a.to_text(),
            confirmed=confirmed_a,
        )
    )

    de_morgan = parse("~(p | q) <-> ~p &r ~q", "Lr")
    matrix_b = tautology(d2p, de_morgan)
    kripke_b = entails_discussive([], de_morgan, "Lr", 2, bit_limit=bit_limit)
    model = kripke_b.countermodel
    confirmed_b = (
        matrix_b.holds
        and not kripke_b.holds
        and model is not None
        and len(model.worlds) == 2
        and dict(model.valuation) == {"p": (True, False), "q": (False, True)}
    )
    report.facts.append(
        NoncontainmentFact(
            name="b",
            description="the disjunction axiom Ax16 is a three-valued tautology without a discussive model",
            formula=de_morgan,
            kripke_label=kripke_b.label,
            matrix_label=matrix_b.label,
            witness=kripke_b.to_text(),
            confirmed=confirmed_b,
        )
    )
    for fact in report.facts:
        log = _logger.debug if fact.confirmed else _logger.warning
        log(f"비포함 사실 ({fact.name}): {'확인' if fact.confirmed else '확인 실패'}")
    return report
