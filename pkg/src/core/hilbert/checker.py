from __future__ import annotations

import logging
from collections.abc import Mapping
from typing import Optional

from ..errors import DerivationFormatError, LanguageError, UnknownRegistryKeyError
from ..formula import Binary, Connective, Formula, Meta, Unary, check_language
from .catalog import list_system
from .models import AxiomSystem, Derivation, DerivationVerdict, FailureReason, JustificationKind


_logger = logging.getLogger(__name__)


def match_schema(schema: Formula, f: Formula) -> Optional[dict[str, Formula]]:
    """
    도식 인스턴스 판정

    첫 등장에서 메타변수를 묶고, 이후 등장은 정확히 같아야 한다. 불일치는 None.
    """
    binding: dict[str, Formula] = {}
    stack: list[tuple[Formula, Formula]] = [(schema, f)]
    while stack:
        pattern, target = stack.pop()
        if isinstance(pattern, Meta):
            bound = binding.get(pattern.name)
            if bound is None:
                binding[pattern.name] = target
            elif bound != target:
                return None
        elif isinstance(pattern, Unary):
            if not isinstance(target, Unary) or target.conn is not pattern.conn:
                return None
            stack.append((pattern.child, target.child))
        elif isinstance(pattern, Binary):
            if not isinstance(target, Binary) or target.conn is not pattern.conn:
                return None
            # 왼쪽을 먼저 보도록 오른쪽을 먼저 쌓는다
            stack.append((pattern.right, target.right))
            stack.append((pattern.left, target.left))
        elif pattern != target:
            return None
    return binding


def _hint_conflict(binding: Mapping[str, Formula], hint: Optional[Mapping[str, Formula]]) -> Optional[str]:
    """치환 힌트가 실제 묶음과 어긋나는 첫 메타변수 이름."""

    if not hint:
        return None
    for name in sorted(hint):
        if binding.get(name) != hint[name]:
            return name
    return None


def find_schema(system: AxiomSystem, f: Formula, hint: Optional[Mapping[str, Formula]] = None) -> Optional[str]:
    """등록 순서대로 처음 맞는 도식 이름. hint가 있으면 그 치환과 어긋나지 않는 도식만 본다."""

    for schema in system.schemata:
        binding = match_schema(schema.formula, f)
        if binding is not None and _hint_conflict(binding, hint) is None:
            return schema.name
    return None


def _fail(d: Derivation, line_no: int, reason: FailureReason, detail: str, matched: dict[int, str]) -> DerivationVerdict:
    _logger.debug(f"{d.system_id} 유도 {line_no}행 실패: {reason.value} {detail}")
    return DerivationVerdict(
        valid=False,
        system_id=d.system_id,
        first_bad_line=line_no,
        reason=reason,
        detail=detail,
        matched_schemata=matched,
    )


def check_derivation(d: Derivation) -> DerivationVerdict:
    """
    유도 검사

    각 줄은 전제이거나, 체계의 공리 도식 인스턴스이거나, 앞선 두 줄에서 MP로 얻어야 한다.

    Raises:
        UnknownRegistryKeyError: 알 수 없는 체계
        DerivationFormatError: 줄이 하나도 없는 경우
    """
    system = list_system(d.system_id)
    if not d.lines:
        raise DerivationFormatError("유도에 줄이 없습니다", 0)

    premises = set(d.premises)
    matched: dict[int, str] = {}
    for line_no, line in enumerate(d.lines, start=1):
        f = line.formula
        just = line.justification
        try:
            check_language(f, system.language)
        except LanguageError as e:
            return _fail(d, line_no, FailureReason.WRONG_LANGUAGE, str(e), matched)

        if just.kind is JustificationKind.PREMISE:
            if f not in premises:
                return _fail(d, line_no, FailureReason.NOT_A_PREMISE, "", matched)
        elif just.kind is JustificationKind.AXIOM:
            if just.schema_name:
                try:
                    schema = system.schema(just.schema_name)
                except UnknownRegistryKeyError as e:
                    return _fail(d, line_no, FailureReason.NO_SCHEMA_MATCH, str(e), matched)
                binding = match_schema(schema.formula, f)
                if binding is not None:
                    conflict = _hint_conflict(binding, just.substitution)
                    if conflict is not None:
                        return _fail(d, line_no, FailureReason.NO_SCHEMA_MATCH, f"{schema.name}: 치환 {conflict} 불일치", matched)
                name = schema.name if binding is not None else None
            else:
                name = find_schema(system, f, just.substitution)
            if name is None:
                return _fail(d, line_no, FailureReason.NO_SCHEMA_MATCH, just.schema_name or "", matched)
            matched[line_no] = name
        else:
            if len(just.refs) != 2 or not all(1 <= ref < line_no for ref in just.refs):
                return _fail(d, line_no, FailureReason.BAD_MP_REFERENCE, f"refs={list(just.refs)}", matched)
            antecedent = d.lines[just.refs[0] - 1].formula
            conditional = d.lines[just.refs[1] - 1].formula
            expected = Binary(Connective.IMP, antecedent, f)
            if conditional != expected:
                return _fail(d, line_no, FailureReason.MP_SHAPE_MISMATCH, "", matched)

    return DerivationVerdict(
        valid=True,
        system_id=system.system_id,
        conclusion=d.conclusion,
        matched_schemata=matched,
    )
