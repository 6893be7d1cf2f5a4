from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Union

from ...utils.settings import AppSettings
from ..formula import Formula, lookup_language
from .generator import GeneratorConfig, gen_formula
from .harness import crosscheck, noncontainment_check
from .models import CrosscheckPair, CrosscheckReport, NoncontainmentReport
from .pairs import list_pairs, lookup_pair
from .reporting import export_report


class CrossChecker:
    """
    교차 검증기
    설정값을 기본으로 표본 생성, 비교, 보고서 저장
    """

    def __init__(self, settings: Optional[AppSettings] = None) -> None:
        self._logger = logging.getLogger(__name__)
        self._settings = settings if settings is not None else AppSettings()

    @property
    def settings(self) -> AppSettings:
        return self._settings

    def pairs(self) -> list[CrosscheckPair]:
        return list_pairs()

    def config_for(self, pair_name: str, seed: Optional[int] = None) -> GeneratorConfig:
        pair = lookup_pair(pair_name)
        return GeneratorConfig(
            language=lookup_language(pair.language),
            max_depth=self._settings.generator_max_depth,
            variable_count=self._settings.generator_variable_count,
            seed=self._settings.default_seed if seed is None else seed,
        )

    def generate(self, cfg: GeneratorConfig, index: int) -> Formula:
        return gen_formula(cfg, index)

    def run(
        self,
        pair_name: str,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> CrosscheckReport:
        cfg = self.config_for(pair_name, seed)
        count = self._settings.default_samples if samples is None else samples
        self._logger.info(f"교차 검증 시작: {pair_name}, 표본 {count}, seed {cfg.seed}")
        return crosscheck(
            pair_name,
            cfg,
            count,
            max_premises=self._settings.max_premises,
            workers=self._settings.crosscheck_workers if workers is None else workers,
            bit_limit=self._settings.enumeration_bit_limit,
            variable_limit=self._settings.matrix_variable_limit,
        )

    def noncontainment(self) -> NoncontainmentReport:
        return noncontainment_check(bit_limit=self._settings.enumeration_bit_limit)

    def export(self, report: CrosscheckReport, output_path: Union[str, Path]) -> Path:
        return export_report(report, output_path)
