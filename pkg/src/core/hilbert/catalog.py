from __future__ import annotations

from typing import Any

from ..errors import UnknownRegistryKeyError
from ..formula import lookup_language, parse_schema
from .models import AxiomSchema, AxiomSystem


# 공통 도식 (언어에 무관)
_AX1 = ("Ax1", "A -> (B -> A)")
_AX2 = ("Ax2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))")
_AX3 = ("Ax3", "((A -> B) -> A) -> A")
_AX7 = ("Ax7", "(~A -> A) -> A")
_AX8 = ("Ax8", "~~A <-> A")

_D2_MINUS = [
    _AX1,
    _AX2,
    _AX3,
    ("Ax4", "A &r B -> A"),
    ("Ax5", "A &r B -> B"),
    ("Ax6", "(C -> A) -> ((C -> B) -> (C -> A &r B))"),
    _AX7,
    _AX8,
    ("Ax9", "~(A &r B) <-> (B -> ~A)"),
    ("Ax10", "~(A -> B) <-> A &r ~B"),
]

SYSTEM_RAW: dict[str, dict[str, Any]] = {
    "D2-MINUS": {
        "language": "Lr-",
        "description": "disjunction-free discussive logic, Ax1-Ax10 and MP",
        "schemata": _D2_MINUS,
    },
    "D2-PLUS": {
        "language": "Lr",
        "description": "D2-MINUS with disjunction axioms Ax13-Ax16",
        "schemata": [
            *_D2_MINUS,
            ("Ax13", "A -> A | B"),
            ("Ax14", "B -> A | B"),
            ("Ax15", "(A -> C) -> ((B -> C) -> (A | B -> C))"),
            ("Ax16", "~(A | B) <-> ~A &r ~B"),
        ],
    },
    "D2-LEFT": {
        "language": "Ll-",
        "description": "left discussive conjunction; Ax9 replaced by Ax9'",
        "schemata": [
            _AX1,
            _AX2,
            _AX3,
            ("Ax4", "A &l B -> A"),
            ("Ax5", "A &l B -> B"),
            ("Ax6", "(C -> A) -> ((C -> B) -> (C -> A &l B))"),
            _AX7,
            _AX8,
            ("Ax9'", "~(A &l B) <-> (A -> ~B)"),
            ("Ax10", "~(A -> B) <-> A &l ~B"),
        ],
    },
    "D2-NC": {
        "language": "L-NC",
        "description": "negation-conditional fragment; Ax8 split, Ax10 replaced by Ax10.1-Ax10.3",
        "schemata": [
            _AX1,
            _AX2,
            _AX3,
            _AX7,
            ("Ax8a", "~~A -> A"),
            ("Ax8b", "A -> ~~A"),
            ("Ax10.1", "~(A -> B) -> A"),
            ("Ax10.2", "~(A -> B) -> ~B"),
            ("Ax10.3", "A -> (~B -> ~(A -> B))"),
        ],
    },
    "D2-DN": {
        "language": "L-DN",
        "description": "discussive negation ~d; Ax8 replaced by Ax8'",
        "schemata": [
            _AX1,
            _AX2,
            _AX3,
            ("Ax4", "A &r B -> A"),
            ("Ax5", "A &r B -> B"),
            ("Ax6", "(C -> A) -> ((C -> B) -> (C -> A &r B))"),
            ("Ax7", "(~d A -> A) -> A"),
            ("Ax8'", "~d A -> (~d ~d A -> B)"),
            ("Ax9", "~d (A &r B) <-> (B -> ~d A)"),
            ("Ax10", "~d (A -> B) <-> A &r ~d B"),
        ],
    },
}


def build_system(system_id: str, raw: dict[str, Any]) -> AxiomSystem:
    language = lookup_language(raw["language"])
    schemata = tuple(AxiomSchema(name=name, formula=parse_schema(text, language)) for name, text in raw["schemata"])
    return AxiomSystem(
        system_id=system_id,
        language=language,
        schemata=schemata,
        description=str(raw.get("description", "")),
    )


_SYSTEMS: dict[str, AxiomSystem] = {}


def _registry() -> dict[str, AxiomSystem]:
    if not _SYSTEMS:
        for key, raw in SYSTEM_RAW.items():
            _SYSTEMS[key] = build_system(key, raw)
    return _SYSTEMS


def list_system(system_id: str) -> AxiomSystem:
    """등록된 공리 체계 조회."""

    key = str(system_id or "").strip().upper()
    system = _registry().get(key)
    if system is None:
        raise UnknownRegistryKeyError("공리 체계", str(system_id), list(SYSTEM_RAW))
    return system


def list_systems() -> list[AxiomSystem]:
    return list(_registry().values())
