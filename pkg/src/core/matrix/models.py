from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any, Optional

from ..errors import ModelError, ValuationError
from ..formula import Connective, Formula, LanguageTag, print_formula


class TruthValue(Enum):
    """진리값 기호. 순서는 행렬의 values 튜플이 정한다."""

    ONE = "1"
    I = "i"
    J = "j"
    ZERO = "0"
    T = "t"
    B = "b"
    N = "n"
    F = "f"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_symbol(cls, symbol: str) -> "TruthValue":
        key = str(symbol or "").strip()
        for member in cls:
            if member.value == key:
                return member
        raise ValuationError(f"알 수 없는 진리값: {symbol!r}")


@dataclass(frozen=True)
class Matrix:
    """유한 논리 행렬: 값 집합, 연결사별 진리함수, 지정값."""

    matrix_id: str
    language: LanguageTag
    values: tuple[TruthValue, ...]
    designated: frozenset[TruthValue]
    unary: Mapping[Connective, Mapping[TruthValue, TruthValue]] = field(compare=False)
    binary: Mapping[Connective, Mapping[tuple[TruthValue, TruthValue], TruthValue]] = field(compare=False)
    description: str = ""

    def __post_init__(self) -> None:
        if not self.designated:
            raise ModelError(f"{self.matrix_id}: 지정값 집합이 비어 있습니다")
        if not self.designated < frozenset(self.values):
            raise ModelError(f"{self.matrix_id}: 지정값은 값 집합의 진부분집합이어야 합니다")
        defined = set(self.unary) | set(self.binary)
        if defined != set(self.language.connectives):
            raise ModelError(f"{self.matrix_id}: 진리표 연결사가 언어 {self.language.name}와 다릅니다")
        for conn, table in self.unary.items():
            if set(table) != set(self.values) or not set(table.values()) <= set(self.values):
                raise ModelError(f"{self.matrix_id}: '{conn.value}' 진리표가 전역적이지 않습니다")
        pairs = {(a, b) for a in self.values for b in self.values}
        for conn, table in self.binary.items():
            if set(table) != pairs or not set(table.values()) <= set(self.values):
                raise ModelError(f"{self.matrix_id}: '{conn.value}' 진리표가 전역적이지 않습니다")
        object.__setattr__(self, "unary", MappingProxyType(dict(self.unary)))
        object.__setattr__(self, "binary", MappingProxyType(dict(self.binary)))

    def is_designated(self, value: TruthValue) -> bool:
        return value in self.designated

    def apply(self, conn: Connective, *args: TruthValue) -> TruthValue:
        if len(args) == 1:
            return self.unary[conn][args[0]]
        return self.binary[conn][(args[0], args[1])]

    @property
    def has_conditional(self) -> bool:
        return Connective.IMP in self.binary


@dataclass(frozen=True)
class Valuation:
    """선언된 변수 목록 위의 전역 할당 (변수 이름순)."""

    assignment: tuple[tuple[str, TruthValue], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, TruthValue]) -> "Valuation":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[str, TruthValue]:
        return dict(self.assignment)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.assignment)

    def get(self, name: str) -> TruthValue:
        for var, value in self.assignment:
            if var == name:
                return value
        raise ValuationError(f"변수 {name}의 값이 할당되지 않았습니다")

    def render_lines(self) -> list[str]:
        return [f"{name}={value.value}" for name, value in self.assignment]

    def to_dict(self) -> dict[str, str]:
        return {name: value.value for name, value in self.assignment}


@dataclass
class MatrixVerdict:
    """행렬 귀결 판정 결과."""

    holds: bool
    matrix_id: str
    premises: list[Formula]
    conclusion: Formula
    variables: tuple[str, ...] = ()
    countermodel: Optional[Valuation] = None
    checked: int = 0

    @property
    def label(self) -> str:
        return "HOLDS" if self.holds else "FAILS"

    def to_text(self) -> str:
        lines = [self.label]
        if self.countermodel is not None:
            lines.extend(self.countermodel.render_lines())
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.label,
            "semantics": self.matrix_id,
            "premises": [print_formula(p) for p in self.premises],
            "conclusion": print_formula(self.conclusion),
            "variables": list(self.variables),
            "countermodel": self.countermodel.to_dict() if self.countermodel else None,
            "checked": self.checked,
        }
