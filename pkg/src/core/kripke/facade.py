from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Optional

from ..formula import Formula, LanguageTag
from ..matrix import TruthValue
from .models import KripkeModel, RoutleyModel, SearchVerdict, StarMode
from .search import DEFAULT_BIT_LIMIT, default_bound, entails_discussive, routley_entails
from .semantics import belnap_decode, fourvalued_decode, interpret, interpret_routley


class KripkeSearcher:
    """
    Kripke / Routley 모델 탐색기
    비트 한도를 공유하는 귀결 판정 진입점
    """

    def __init__(self, bit_limit: int = DEFAULT_BIT_LIMIT) -> None:
        self._logger = logging.getLogger(__name__)
        self._bit_limit = max(1, int(bit_limit))

    @property
    def bit_limit(self) -> int:
        return self._bit_limit

    def default_bound(self, premises: Sequence[Formula], conclusion: Formula, lang: "str | LanguageTag") -> int:
        return default_bound(premises, conclusion, lang, bit_limit=self._bit_limit)

    def entails(
        self,
        premises: Sequence[Formula],
        conclusion: Formula,
        lang: "str | LanguageTag",
        max_worlds: Optional[int] = None,
    ) -> SearchVerdict:
        verdict = entails_discussive(premises, conclusion, lang, max_worlds, bit_limit=self._bit_limit)
        self._logger.debug(f"kripke: {verdict.label} ({verdict.checked}개 모델 검사)")
        return verdict

    def routley_entails(
        self,
        premise: Formula,
        conclusion: Formula,
        mode: "str | StarMode",
        max_worlds: int = 2,
    ) -> SearchVerdict:
        verdict = routley_entails(premise, conclusion, mode, max_worlds, bit_limit=self._bit_limit)
        self._logger.debug(f"{verdict.semantics}: {verdict.label} ({verdict.checked}개 모델 검사)")
        return verdict

    def interpret(self, model: KripkeModel, world: str, f: Formula) -> bool:
        return interpret(model, world, f)

    def interpret_routley(self, model: RoutleyModel, world: str, f: Formula) -> bool:
        return interpret_routley(model, world, f)

    def decode(self, model: KripkeModel, f: Formula) -> TruthValue:
        return fourvalued_decode(model, f)

    def decode_belnap(self, model: RoutleyModel, f: Formula) -> TruthValue:
        return belnap_decode(model, f)
