"""
Deduction Module
연역 정리의 구성적 변환: Γ ∪ {A} ⊢ B 유도를 Γ ⊢ A -> B 유도로 바꾼다.

Ax1, Ax2, MP와 자기 함의 A -> A 만 사용한다.

Author: Discussive Lab
"""

from __future__ import annotations

import logging

from ..errors import DeductionError
from ..formula import Formula, imp
from .checker import check_derivation
from .models import Derivation, DerivationLine, Justification, JustificationKind


_logger = logging.getLogger(__name__)


def self_implication(a: Formula, offset: int = 0) -> list[DerivationLine]:
    """A -> A 의 다섯 줄 증명. offset은 앞에 놓일 줄 수 (MP 번호 보정)."""

    aa = imp(a, a)
    ax1_long = imp(a, imp(aa, a))
    ax1_short = imp(a, aa)
    ax2 = imp(ax1_long, imp(ax1_short, aa))
    return [
        DerivationLine(ax1_long, Justification.axiom("Ax1", {"A": a, "B": aa})),
        DerivationLine(ax2, Justification.axiom("Ax2", {"A": a, "B": aa, "C": a})),
        DerivationLine(imp(ax1_short, aa), Justification.mp(offset + 1, offset + 2)),
        DerivationLine(ax1_short, Justification.axiom("Ax1", {"A": a, "B": a})),
        DerivationLine(aa, Justification.mp(offset + 4, offset + 3)),
    ]


def deduction_transform(d: Derivation, dischargee: Formula) -> Derivation:
    """
    전제 dischargee를 조건문의 전건으로 옮긴다

    Raises:
        DeductionError: 입력 유도가 유효하지 않거나 dischargee가 전제가 아닌 경우
    """
    verdict = check_derivation(d)
    if not verdict.valid:
        raise DeductionError(f"유효하지 않은 유도는 변환할 수 없습니다 ({verdict.first_bad_line}행: {verdict.reason.value if verdict.reason else ''})")
    if dischargee not in d.premises:
        raise DeductionError("소거할 식이 전제 목록에 없습니다")

    a = dischargee
    out: list[DerivationLine] = []
    # 입력 줄 번호 -> A -> C 가 놓인 출력 줄 번호
    position: dict[int, int] = {}

    for line_no, line in enumerate(d.lines, start=1):
        c = line.formula
        just = line.justification
        if c == a:
            out.extend(self_implication(a, offset=len(out)))
        elif just.kind is JustificationKind.MP:
            i, j = just.refs
            antecedent = d.lines[i - 1].formula
            ax2 = imp(imp(a, imp(antecedent, c)), imp(imp(a, antecedent), imp(a, c)))
            out.append(DerivationLine(ax2, Justification.axiom("Ax2", {"A": a, "B": antecedent, "C": c})))
            out.append(DerivationLine(imp(imp(a, antecedent), imp(a, c)), Justification.mp(position[j], len(out))))
            out.append(DerivationLine(imp(a, c), Justification.mp(position[i], len(out))))
        else:
            if just.kind is JustificationKind.PREMISE:
                origin = Justification.premise()
            else:
                origin = Justification.axiom(verdict.matched_schemata.get(line_no, just.schema_name))
            out.append(DerivationLine(c, origin))
            out.append(DerivationLine(imp(c, imp(a, c)), Justification.axiom("Ax1", {"A": c, "B": a})))
            out.append(DerivationLine(imp(a, c), Justification.mp(len(out) - 1, len(out))))
        position[line_no] = len(out)

    premises = tuple(p for p in d.premises if p != a)
    _logger.debug(f"연역 변환: {len(d.lines)}줄 -> {len(out)}줄")
    return Derivation(system_id=d.system_id, premises=premises, lines=tuple(out))
