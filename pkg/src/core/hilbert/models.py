from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from ..errors import UnknownRegistryKeyError
from ..formula import Formula, LanguageTag, print_formula


@dataclass(frozen=True)
class AxiomSchema:
    """이름 붙은 공리 도식 (메타변수를 포함한 식)."""

    name: str
    formula: Formula

    @property
    def text(self) -> str:
        return print_formula(self.formula)


@dataclass(frozen=True)
class AxiomSystem:
    """공리 도식 목록 + 규칙 MP."""

    system_id: str
    language: LanguageTag
    schemata: tuple[AxiomSchema, ...]
    description: str = ""
    rules: tuple[str, ...] = ("MP",)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.schemata)

    def schema(self, name: str) -> AxiomSchema:
        key = str(name or "").strip().lower()
        for s in self.schemata:
            if s.name.lower() == key:
                return s
        raise UnknownRegistryKeyError(f"{self.system_id} 공리", name, list(self.names))


class JustificationKind(Enum):
    PREMISE = "premise"
    AXIOM = "axiom"
    MP = "mp"


@dataclass(frozen=True)
class Justification:
    """
    유도 한 줄의 근거

    mp(i, j): j번째 줄이 (i번째 줄 -> 현재 줄). 번호는 1부터.
    """

    kind: JustificationKind
    schema_name: Optional[str] = None
    refs: tuple[int, ...] = ()
    substitution: Optional[Mapping[str, Formula]] = field(default=None, compare=False)

    @classmethod
    def premise(cls) -> "Justification":
        return cls(JustificationKind.PREMISE)

    @classmethod
    def axiom(cls, schema_name: Optional[str] = None, substitution: Optional[Mapping[str, Formula]] = None) -> "Justification":
        return cls(JustificationKind.AXIOM, schema_name=schema_name, substitution=substitution)

    @classmethod
    def mp(cls, antecedent: int, conditional: int) -> "Justification":
        return cls(JustificationKind.MP, refs=(int(antecedent), int(conditional)))

    def render(self) -> str:
        if self.kind is JustificationKind.PREMISE:
            return "premise"
        if self.kind is JustificationKind.MP:
            return f"mp {self.refs[0]} {self.refs[1]}"
        if self.schema_name:
            return "ax" + self.schema_name[2:] if self.schema_name.lower().startswith("ax") else self.schema_name
        return "axiom"


@dataclass(frozen=True)
class DerivationLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Derivation:
    """체계 system_id에서 전제 premises로부터의 유도."""

    system_id: str
    premises: tuple[Formula, ...]
    lines: tuple[DerivationLine, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def conclusion(self) -> Optional[Formula]:
        return self.lines[-1].formula if self.lines else None

    def __len__(self) -> int:
        return len(self.lines)


class FailureReason(Enum):
    NOT_A_PREMISE = "not-a-premise"
    NO_SCHEMA_MATCH = "no-schema-match"
    BAD_MP_REFERENCE = "bad-mp-reference"
    MP_SHAPE_MISMATCH = "mp-shape-mismatch"
    WRONG_LANGUAGE = "wrong-language"


@dataclass
class DerivationVerdict:
    """유도 검사 결과. 실패 시 첫 번째 잘못된 줄 (1부터)과 이유."""

    valid: bool
    system_id: str
    conclusion: Optional[Formula] = None
    first_bad_line: Optional[int] = None
    reason: Optional[FailureReason] = None
    detail: str = ""
    matched_schemata: dict[int, str] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return "VALID" if self.valid else "INVALID"

    def to_text(self) -> str:
        if self.valid:
            conclusion = print_formula(self.conclusion) if self.conclusion is not None else ""
            return f"VALID\nconclusion: {conclusion}"
        reason = self.reason.value if self.reason else "unknown"
        text = f"INVALID\nline {self.first_bad_line}: {reason}"
        return f"{text}\n{self.detail}" if self.detail else text

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.label,
            "system": self.system_id,
            "conclusion": print_formula(self.conclusion) if self.conclusion is not None else None,
            "first_bad_line": self.first_bad_line,
            "reason": self.reason.value if self.reason else None,
            "detail": self.detail,
            "matched_schemata": {str(k): v for k, v in self.matched_schemata.items()},
        }
