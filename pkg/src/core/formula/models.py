from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


class Connective(Enum):
    """원시 연결사 (값은 ASCII 기호)."""

    NEG = "~"
    DNEG = "~d"
    IMP = "->"
    CONJ_R = "&r"
    CONJ_L = "&l"
    CONJ = "&"
    DISJ = "|"

    @property
    def arity(self) -> int:
        return 1 if self in (Connective.NEG, Connective.DNEG) else 2

    @property
    def precedence(self) -> int:
        """클수록 강하게 결합."""

        return _PRECEDENCE[self]


_PRECEDENCE: dict[Connective, int] = {
    Connective.NEG: 4,
    Connective.DNEG: 4,
    Connective.CONJ_R: 3,
    Connective.CONJ_L: 3,
    Connective.CONJ: 3,
    Connective.DISJ: 2,
    Connective.IMP: 1,
}

UNARY_CONNECTIVES = (Connective.NEG, Connective.DNEG)
BINARY_CONNECTIVES = (
    Connective.IMP,
    Connective.CONJ_R,
    Connective.CONJ_L,
    Connective.CONJ,
    Connective.DISJ,
)


@dataclass(frozen=True)
class Atom:
    """명제 변수 (소문자 식별자)."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Meta:
    """공리 도식의 메타변수 (대문자 식별자)."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Unary:
    conn: Connective
    child: "Formula"


@dataclass(frozen=True)
class Binary:
    conn: Connective
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Meta, Unary, Binary]


def neg(child: Formula) -> Unary:
    return Unary(Connective.NEG, child)


def dneg(child: Formula) -> Unary:
    return Unary(Connective.DNEG, child)


def imp(left: Formula, right: Formula) -> Binary:
    return Binary(Connective.IMP, left, right)


def conj_r(left: Formula, right: Formula) -> Binary:
    return Binary(Connective.CONJ_R, left, right)


def conj_l(left: Formula, right: Formula) -> Binary:
    return Binary(Connective.CONJ_L, left, right)


def conj(left: Formula, right: Formula) -> Binary:
    return Binary(Connective.CONJ, left, right)


def disj(left: Formula, right: Formula) -> Binary:
    return Binary(Connective.DISJ, left, right)
