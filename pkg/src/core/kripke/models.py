from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any, Optional, Union

from ..errors import ModelError, ValuationError
from ..formula import Formula, print_formula


class StarMode(Enum):
    """Routley 귀결의 세 가지 방식"""

    FORALL = "forall"
    BASE = "base"
    EXISTS = "exists"

    @classmethod
    def from_value(cls, value: "str | StarMode") -> "StarMode":
        if isinstance(value, StarMode):
            return value
        key = str(value or "").strip().lower()
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"알 수 없는 star 방식: {value!r} (forall, base, exists)")


def world_names(count: int) -> tuple[str, ...]:
    return tuple(f"w{idx}" for idx in range(1, count + 1))


def _freeze_valuation(
    worlds: Sequence[str],
    valuation: Mapping[str, Sequence[Any]],
) -> Mapping[str, tuple[bool, ...]]:
    frozen: dict[str, tuple[bool, ...]] = {}
    for name in sorted(valuation):
        pattern = tuple(bool(v) for v in valuation[name])
        if len(pattern) != len(worlds):
            raise ModelError(f"변수 {name}의 값 개수({len(pattern)})가 세계 수({len(worlds)})와 다릅니다")
        frozen[name] = pattern
    return MappingProxyType(frozen)


def _check_worlds(worlds: Sequence[str]) -> None:
    if not worlds:
        raise ModelError("세계 집합이 비어 있습니다")
    if len(set(worlds)) != len(worlds):
        raise ModelError("세계 이름이 중복됩니다")


@dataclass(frozen=True)
class KripkeModel:
    """
    담론 Kripke 모델 ⟨W, v⟩

    valuation은 변수마다 worlds 순서의 진리값 튜플이다.
    """

    worlds: tuple[str, ...]
    valuation: Mapping[str, tuple[bool, ...]] = field(compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "worlds", tuple(self.worlds))
        _check_worlds(self.worlds)
        object.__setattr__(self, "valuation", _freeze_valuation(self.worlds, self.valuation))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KripkeModel):
            return NotImplemented
        return self.worlds == other.worlds and dict(self.valuation) == dict(other.valuation)

    def __hash__(self) -> int:
        return hash((self.worlds, tuple(self.valuation.items())))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(self.valuation)

    def world_index(self, world: str) -> int:
        try:
            return self.worlds.index(world)
        except ValueError:
            raise ValuationError(f"알 수 없는 세계: {world}") from None

    def value(self, world: str, variable: str) -> bool:
        idx = self.world_index(world)
        if variable not in self.valuation:
            raise ValuationError(f"변수 {variable}의 값이 할당되지 않았습니다")
        return self.valuation[variable][idx]

    def render_lines(self) -> list[str]:
        lines = [f"WORLDS {len(self.worlds)}"]
        lines.extend(_world_lines(self.worlds, self.valuation))
        return lines

    def to_text(self) -> str:
        return "\n".join(self.render_lines())

    def to_dict(self) -> dict[str, Any]:
        return {
            "worlds": list(self.worlds),
            "valuation": {name: [int(v) for v in pattern] for name, pattern in self.valuation.items()},
        }


@dataclass(frozen=True)
class RoutleyModel:
    """
    Routley star 모델 ⟨W, g, *, v⟩

    star는 worlds의 인덱스 튜플로, star[i]가 i번째 세계의 짝이다 (star∘star = id).
    """

    worlds: tuple[str, ...]
    base: str
    star: tuple[int, ...]
    valuation: Mapping[str, tuple[bool, ...]] = field(compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "star", tuple(int(s) for s in self.star))
        _check_worlds(self.worlds)
        if self.base not in self.worlds:
            raise ModelError(f"기준 세계 {self.base}가 세계 집합에 없습니다")
        count = len(self.worlds)
        if len(self.star) != count or any(not 0 <= s < count for s in self.star):
            raise ModelError("star 사상이 세계 집합 위의 함수가 아닙니다")
        if any(self.star[self.star[i]] != i for i in range(count)):
            raise ModelError("star 사상이 involution이 아닙니다 (w** != w)")
        object.__setattr__(self, "valuation", _freeze_valuation(self.worlds, self.valuation))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RoutleyModel):
            return NotImplemented
        return (
            self.worlds == other.worlds
            and self.base == other.base
            and self.star == other.star
            and dict(self.valuation) == dict(other.valuation)
        )

    def __hash__(self) -> int:
        return hash((self.worlds, self.base, self.star, tuple(self.valuation.items())))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(self.valuation)

    @property
    def base_index(self) -> int:
        return self.worlds.index(self.base)

    def world_index(self, world: str) -> int:
        try:
            return self.worlds.index(world)
        except ValueError:
            raise ValuationError(f"알 수 없는 세계: {world}") from None

    def star_of(self, world: str) -> str:
        return self.worlds[self.star[self.world_index(world)]]

    def as_kripke(self) -> KripkeModel:
        return KripkeModel(self.worlds, self.valuation)

    def render_lines(self) -> list[str]:
        lines = [
            f"WORLDS {len(self.worlds)}",
            "STAR " + " ".join(self.worlds[s] for s in self.star),
            f"BASE {self.base}",
        ]
        lines.extend(_world_lines(self.worlds, self.valuation))
        return lines

    def to_text(self) -> str:
        return "\n".join(self.render_lines())

    def to_dict(self) -> dict[str, Any]:
        return {
            "worlds": list(self.worlds),
            "star": [self.worlds[s] for s in self.star],
            "base": self.base,
            "valuation": {name: [int(v) for v in pattern] for name, pattern in self.valuation.items()},
        }


def _world_lines(worlds: Sequence[str], valuation: Mapping[str, tuple[bool, ...]]) -> list[str]:
    lines = []
    for idx, world in enumerate(worlds):
        cells = " ".join(f"{name}={int(valuation[name][idx])}" for name in valuation)
        lines.append(f"{world}: {cells}".rstrip())
    return lines


Countermodel = Union[KripkeModel, RoutleyModel]


@dataclass
class SearchVerdict:
    """유한 모델 탐색 결과 (Kripke / Routley 공용)."""

    holds: bool
    semantics: str
    premises: list[Formula]
    conclusion: Formula
    bound: int
    complete: bool = False
    countermodel: Optional[Countermodel] = None
    checked: int = 0

    @property
    def label(self) -> str:
        if not self.holds:
            return "FAILS"
        return "HOLDS" if self.complete else f"HOLDS-UP-TO-BOUND {self.bound}"

    def to_text(self) -> str:
        lines = [self.label]
        if self.countermodel is not None:
            lines.extend(self.countermodel.render_lines())
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.label,
            "semantics": self.semantics,
            "premises": [print_formula(p) for p in self.premises],
            "conclusion": print_formula(self.conclusion),
            "bound": self.bound,
            "complete": self.complete,
            "countermodel": self.countermodel.to_dict() if self.countermodel else None,
            "checked": self.checked,
        }
