from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import LanguageError, UnknownRegistryKeyError
from .models import Connective


@dataclass(frozen=True)
class LanguageTag:
    """언어 이름과 연결사 집합."""

    name: str
    connectives: frozenset[Connective]
    description: str = ""

    def __str__(self) -> str:
        return self.name

    def allows(self, conn: Connective) -> bool:
        return conn in self.connectives

    @property
    def has_disjunction(self) -> bool:
        return Connective.DISJ in self.connectives

    @property
    def biconditional_conjunction(self) -> Optional[Connective]:
        """`<->` 확장에 쓰는 담론 연언 (없으면 None)."""

        if Connective.CONJ_R in self.connectives:
            return Connective.CONJ_R
        if Connective.CONJ_L in self.connectives:
            return Connective.CONJ_L
        return None


_C = Connective

_LANGUAGE_RAW: dict[str, tuple[frozenset[Connective], str]] = {
    "L": (frozenset({_C.NEG, _C.IMP, _C.CONJ, _C.DISJ}), "classical conjunction and disjunction"),
    "Lr-": (frozenset({_C.NEG, _C.IMP, _C.CONJ_R}), "right discussive conjunction, no disjunction"),
    "Lr": (frozenset({_C.NEG, _C.IMP, _C.CONJ_R, _C.DISJ}), "right discussive conjunction with disjunction"),
    "Ll-": (frozenset({_C.NEG, _C.IMP, _C.CONJ_L}), "left discussive conjunction, no disjunction"),
    "Ll": (frozenset({_C.NEG, _C.IMP, _C.CONJ_L, _C.DISJ}), "left discussive conjunction with disjunction"),
    "L-NC": (frozenset({_C.NEG, _C.IMP}), "negation-conditional fragment"),
    "L-DN": (frozenset({_C.DNEG, _C.IMP, _C.CONJ_R}), "discussive negation"),
    "L-FDE": (frozenset({_C.NEG, _C.CONJ, _C.DISJ}), "first degree entailment"),
}

LANGUAGES: dict[str, LanguageTag] = {
    name: LanguageTag(name=name, connectives=conns, description=desc)
    for name, (conns, desc) in _LANGUAGE_RAW.items()
}


# 등록되지 않은 전체 연결사 태그. 언어 검사를 뒤로 미루는 파싱에만 쓴다.
UNRESTRICTED = LanguageTag(name="*", connectives=frozenset(Connective), description="every connective")


def lookup_language(name: "str | LanguageTag") -> LanguageTag:
    if isinstance(name, LanguageTag):
        return name
    key = str(name or "").strip()
    tag = LANGUAGES.get(key)
    if tag is None:
        raise UnknownRegistryKeyError("언어", key, list(LANGUAGES))
    return tag


def list_languages() -> list[LanguageTag]:
    return list(LANGUAGES.values())


def require_connective(lang: LanguageTag, conn: Connective, offset: Optional[int] = None) -> None:
    if not lang.allows(conn):
        raise LanguageError(
            f"연결사 '{conn.value}'는 언어 {lang.name}에 없습니다",
            token=conn.value,
            offset=offset,
        )
