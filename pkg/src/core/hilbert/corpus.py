from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from ..formula import Binary, Connective, Formula, parse, substitute
from .catalog import list_system
from .models import Derivation, DerivationLine, Justification


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    derivation: Derivation
    dischargee: Formula


Step = Union[tuple[str, str], tuple[str, str, Mapping[str, str]], tuple[str, int, int]]

# (이름, 전제, 소거할 전제, 줄). 줄: ("premise", 식) / ("ax", 도식, 치환) / ("mp", i, j)
_CORPUS_RAW: list[tuple[str, list[str], str, list[Step]]] = [
    (
        "mp-basic",
        ["p", "p -> q"],
        "p",
        [("premise", "p"), ("premise", "p -> q"), ("mp", 1, 2)],
    ),
    (
        "mp-chain",
        ["p", "p -> q", "q -> r"],
        "p",
        [("premise", "p"), ("premise", "p -> q"), ("mp", 1, 2), ("premise", "q -> r"), ("mp", 3, 4)],
    ),
    (
        "weakening",
        ["p", "q"],
        "q",
        [("premise", "p"), ("ax", "Ax1", {"A": "p", "B": "q"}), ("mp", 1, 2)],
    ),
    ("identity", ["p"], "p", [("premise", "p")]),
    ("unused-dischargee", ["p", "q"], "p", [("premise", "q")]),
    ("axiom-only", ["p"], "p", [("ax", "Ax1", {"A": "q", "B": "r"})]),
    (
        "conjunction-left",
        ["p &r q"],
        "p &r q",
        [("premise", "p &r q"), ("ax", "Ax4", {"A": "p", "B": "q"}), ("mp", 1, 2)],
    ),
    (
        "conjunction-right",
        ["p &r q"],
        "p &r q",
        [("premise", "p &r q"), ("ax", "Ax5", {"A": "p", "B": "q"}), ("mp", 1, 2)],
    ),
    (
        "adjunction",
        ["p", "q"],
        "q",
        [
            ("premise", "p"),
            ("premise", "q"),
            ("ax", "Ax1", {"A": "p", "B": "p"}),
            ("mp", 1, 3),
            ("ax", "Ax1", {"A": "q", "B": "p"}),
            ("mp", 2, 5),
            ("ax", "Ax6", {"C": "p", "A": "p", "B": "q"}),
            ("mp", 4, 7),
            ("mp", 6, 8),
            ("mp", 1, 9),
        ],
    ),
    (
        "contraction",
        ["p -> (p -> q)", "p"],
        "p",
        [
            ("premise", "p -> (p -> q)"),
            ("ax", "Ax2", {"A": "p", "B": "p", "C": "q"}),
            ("mp", 1, 2),
            ("premise", "p"),
            ("ax", "Ax1", {"A": "p", "B": "p"}),
            ("mp", 4, 5),
            ("mp", 6, 3),
            ("mp", 4, 7),
        ],
    ),
    (
        "double-negation-elimination",
        ["~~p"],
        "~~p",
        [
            ("premise", "~~p"),
            ("ax", "Ax8", {"A": "p"}),
            ("ax", "Ax4", {"A": "~~p -> p", "B": "p -> ~~p"}),
            ("mp", 2, 3),
            ("mp", 1, 4),
        ],
    ),
    (
        "double-negation-introduction",
        ["p"],
        "p",
        [
            ("premise", "p"),
            ("ax", "Ax8", {"A": "p"}),
            ("ax", "Ax5", {"A": "~~p -> p", "B": "p -> ~~p"}),
            ("mp", 2, 3),
            ("mp", 1, 4),
        ],
    ),
    (
        "peirce",
        ["(p -> q) -> p"],
        "(p -> q) -> p",
        [("premise", "(p -> q) -> p"), ("ax", "Ax3", {"A": "p", "B": "q"}), ("mp", 1, 2)],
    ),
    (
        "consequentia-mirabilis",
        ["~p -> p"],
        "~p -> p",
        [("premise", "~p -> p"), ("ax", "Ax7", {"A": "p"}), ("mp", 1, 2)],
    ),
    (
        "negated-conjunction",
        ["~(p &r q)", "q"],
        "q",
        [
            ("premise", "~(p &r q)"),
            ("ax", "Ax9", {"A": "p", "B": "q"}),
            ("ax", "Ax4", {"A": "~(p &r q) -> (q -> ~p)", "B": "(q -> ~p) -> ~(p &r q)"}),
            ("mp", 2, 3),
            ("mp", 1, 4),
            ("premise", "q"),
            ("mp", 6, 5),
        ],
    ),
    (
        "negated-conditional",
        ["~(p -> q)"],
        "~(p -> q)",
        [
            ("premise", "~(p -> q)"),
            ("ax", "Ax10", {"A": "p", "B": "q"}),
            ("ax", "Ax4", {"A": "~(p -> q) -> p &r ~q", "B": "p &r ~q -> ~(p -> q)"}),
            ("mp", 2, 3),
            ("mp", 1, 4),
            ("ax", "Ax5", {"A": "p", "B": "~q"}),
            ("mp", 5, 6),
        ],
    ),
    (
        "hypothetical-syllogism",
        ["p -> q", "q -> r"],
        "q -> r",
        [
            ("premise", "q -> r"),
            ("ax", "Ax1", {"A": "q -> r", "B": "p"}),
            ("mp", 1, 2),
            ("ax", "Ax2", {"A": "p", "B": "q", "C": "r"}),
            ("mp", 3, 4),
            ("premise", "p -> q"),
            ("mp", 6, 5),
        ],
    ),
    (
        "repeated-dischargee",
        ["p", "q", "r"],
        "r",
        [
            ("premise", "r"),
            ("premise", "q"),
            ("ax", "Ax1", {"A": "r", "B": "q"}),
            ("mp", 1, 3),
            ("mp", 2, 4),
        ],
    ),
    (
        "axiom-then-mp",
        ["p"],
        "p",
        [("ax", "Ax1", {"A": "p", "B": "q"}), ("premise", "p"), ("mp", 2, 1)],
    ),
    (
        "conjunction-split",
        ["p &r q"],
        "p &r q",
        [
            ("premise", "p &r q"),
            ("ax", "Ax5", {"A": "p", "B": "q"}),
            ("mp", 1, 2),
            ("ax", "Ax4", {"A": "p", "B": "q"}),
            ("mp", 1, 4),
        ],
    ),
    (
        "conditional-conjunction",
        ["r -> p", "r -> q"],
        "r -> p",
        [
            ("premise", "r -> p"),
            ("ax", "Ax6", {"C": "r", "A": "p", "B": "q"}),
            ("mp", 1, 2),
            ("premise", "r -> q"),
            ("mp", 4, 3),
        ],
    ),
    (
        "detached-identity",
        ["p -> p", "p"],
        "p",
        [("premise", "p -> p"), ("premise", "p"), ("mp", 2, 1)],
    ),
]


def _build_entry(name: str, premises: Sequence[str], dischargee: str, steps: Sequence[Step]) -> CorpusEntry:
    system = list_system("D2-MINUS")
    lang = system.language
    lines: list[DerivationLine] = []
    for step in steps:
        kind = step[0]
        if kind == "premise":
            lines.append(DerivationLine(parse(str(step[1]), lang), Justification.premise()))
        elif kind == "ax":
            schema = system.schema(str(step[1]))
            mapping = {key: parse(text, lang) for key, text in step[2].items()}  # type: ignore[index, misc]
            lines.append(DerivationLine(substitute(schema.formula, mapping), Justification.axiom(schema.name, mapping)))
        else:
            i, j = int(step[1]), int(step[2])  # type: ignore[arg-type]
            conditional = lines[j - 1].formula
            if not (isinstance(conditional, Binary) and conditional.conn is Connective.IMP):
                raise ValueError(f"{name}: {j}행은 조건문이 아닙니다")
            lines.append(DerivationLine(conditional.right, Justification.mp(i, j)))
    return CorpusEntry(
        name=name,
        derivation=Derivation(
            system_id=system.system_id,
            premises=tuple(parse(p, lang) for p in premises),
            lines=tuple(lines),
        ),
        dischargee=parse(dischargee, lang),
    )


@lru_cache(maxsize=1)
def derivation_corpus() -> tuple[CorpusEntry, ...]:
    """D2-MINUS의 유효한 유도 모음 (연역 변환 회귀용)."""

    return tuple(_build_entry(*raw) for raw in _CORPUS_RAW)
