"""
Formula Generator Module
시드 기반 난수 논리식 생성기

SplitMix64 (state += 0x9E3779B97F4A7C15, 두 번의 xor-shift-multiply)를 쓰므로
같은 설정이면 어느 구현에서든 같은 식의 흐름이 나온다.

Author: Discussive Lab
"""

from __future__ import annotations

from dataclasses import dataclass

from ..formula import Atom, Binary, Connective, Formula, LanguageTag, Unary, lookup_language


MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_BASE_VARIABLES = ("p", "q", "r", "s", "u", "v")


class SplitMix64:
    """64비트 SplitMix 생성기."""

    def __init__(self, seed: int) -> None:
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound는 1 이상이어야 합니다")
        return self.next_u64() % bound


def variable_pool(count: int) -> tuple[str, ...]:
    """p, q, r, s, u, v 다음은 p1, p2, ..."""

    names = list(_BASE_VARIABLES[:count])
    names.extend(f"p{idx}" for idx in range(1, count - len(_BASE_VARIABLES) + 1))
    return tuple(names)


@dataclass(frozen=True)
class GeneratorConfig:
    language: LanguageTag
    max_depth: int = 4
    variable_count: int = 3
    seed: int = 42

    def __post_init__(self) -> None:
        object.__setattr__(self, "language", lookup_language(self.language))
        if self.max_depth < 0:
            raise ValueError(f"max_depth는 0 이상이어야 합니다: {self.max_depth}")
        if self.variable_count < 1:
            raise ValueError(f"variable_count는 1 이상이어야 합니다: {self.variable_count}")

    @property
    def pool(self) -> tuple[str, ...]:
        return variable_pool(self.variable_count)

    @property
    def connectives(self) -> tuple[Connective, ...]:
        return tuple(c for c in Connective if self.language.allows(c))


def _grow(rng: SplitMix64, cfg: GeneratorConfig, connectives: tuple[Connective, ...], depth: int) -> Formula:
    pool = cfg.pool
    if depth >= cfg.max_depth or not connectives:
        return Atom(pool[rng.below(len(pool))])
    # 원자 가중치는 깊이 + 1, 연결사는 각각 1
    atom_weight = depth + 1
    pick = rng.below(atom_weight + len(connectives))
    if pick < atom_weight:
        return Atom(pool[rng.below(len(pool))])
    conn = connectives[pick - atom_weight]
    if conn.arity == 1:
        return Unary(conn, _grow(rng, cfg, connectives, depth + 1))
    left = _grow(rng, cfg, connectives, depth + 1)
    right = _grow(rng, cfg, connectives, depth + 1)
    return Binary(conn, left, right)


def gen_formula(cfg: GeneratorConfig, index: int) -> Formula:
    """index번째 식. 같은 (cfg, index)는 항상 같은 식을 낸다."""

    rng = SplitMix64(cfg.seed + index * GOLDEN_GAMMA)
    return _grow(rng, cfg, cfg.connectives, 0)
