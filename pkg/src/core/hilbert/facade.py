from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Union

from ..formula import Formula
from .catalog import list_system, list_systems
from .checker import check_derivation, find_schema, match_schema
from .deduction import deduction_transform
from .io import load_derivation, render_derivation, save_derivation
from .models import AxiomSystem, Derivation, DerivationVerdict


class ProofChecker:
    """
    Hilbert 체계 유도 검사기
    유도 파일 읽기, 검사, 연역 정리 변환
    """

    def __init__(self) -> None:
        self._logger = logging.getLogger(__name__)

    def system(self, system_id: str) -> AxiomSystem:
        return list_system(system_id)

    def systems(self) -> list[AxiomSystem]:
        return list_systems()

    def match(self, schema: Formula, f: Formula) -> Optional[dict[str, Formula]]:
        return match_schema(schema, f)

    def identify_axiom(self, system_id: str, f: Formula) -> Optional[str]:
        return find_schema(list_system(system_id), f)

    def check(self, d: Derivation) -> DerivationVerdict:
        verdict = check_derivation(d)
        if verdict.valid:
            self._logger.debug(f"{d.system_id}: 유효한 유도 ({len(d)}줄)")
        else:
            self._logger.info(f"{d.system_id}: {verdict.first_bad_line}행 실패 ({verdict.reason.value if verdict.reason else ''})")
        return verdict

    def check_file(self, path: Union[str, Path]) -> DerivationVerdict:
        return self.check(load_derivation(path))

    def discharge(self, d: Derivation, dischargee: Formula) -> Derivation:
        return deduction_transform(d, dischargee)

    def render(self, d: Derivation) -> str:
        return render_derivation(d)

    def save(self, d: Derivation, path: Union[str, Path]) -> Path:
        return save_derivation(d, path)
