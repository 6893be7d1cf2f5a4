from __future__ import annotations

from typing import Any

from ..errors import UnknownRegistryKeyError
from .models import CrosscheckPair


PAIR_RAW: dict[str, dict[str, Any]] = {
    "3v-vs-4v": {
        "language": "Lr-",
        "left": "D2M-3",
        "right": "D2M-4",
        "description": "three-valued and four-valued consequence agree",
    },
    "3v-vs-kripke": {
        "language": "Lr-",
        "left": "D2M-3",
        "right": "kripke:2",
        "description": "three-valued consequence equals discussive consequence",
    },
    "4v-vs-kripke": {
        "language": "Lr-",
        "left": "D2M-4",
        "right": "kripke:2",
        "description": "four-valued consequence equals two-world discussive consequence",
    },
    "left-3v-vs-kripke": {
        "language": "Ll-",
        "left": "D2L-3",
        "right": "kripke:2",
        "description": "left discussive conjunction",
    },
    "nc-3v-vs-kripke": {
        "language": "L-NC",
        "left": "NC-3",
        "right": "kripke:2",
        "description": "negation-conditional fragment",
    },
    "dn-3v-vs-kripke": {
        "language": "L-DN",
        "left": "DN-3",
        "right": "kripke:2",
        "description": "discussive negation",
    },
    "star-vs-bd:forall": {
        "language": "L-FDE",
        "left": "routley:forall:2",
        "right": "BD-4-ETL",
        "single_premise": True,
        "description": "everywhere-true star consequence equals exactly-true logic",
    },
    "star-vs-bd:base": {
        "language": "L-FDE",
        "left": "routley:base:2",
        "right": "BD-4-FDE",
        "single_premise": True,
        "description": "base-world star consequence equals first degree entailment",
    },
    "star-vs-bd:exists": {
        "language": "L-FDE",
        "left": "routley:exists:2",
        "right": "BD-4-NFL",
        "single_premise": True,
        "description": "somewhere-true star consequence equals non-falsity logic",
    },
    "deduction-3v": {
        "language": "Lr-",
        "left": "D2M-3",
        "right": "D2M-3",
        "deduction": True,
        "description": "G, A |= B against G |= A -> B in the three-valued matrix",
    },
}


def build_pair(name: str, raw: dict[str, Any]) -> CrosscheckPair:
    return CrosscheckPair(
        name=name,
        language=str(raw["language"]),
        left=str(raw["left"]),
        right=str(raw["right"]),
        single_premise=bool(raw.get("single_premise", False)),
        deduction=bool(raw.get("deduction", False)),
        description=str(raw.get("description", "")),
    )


def lookup_pair(name: str) -> CrosscheckPair:
    key = str(name or "").strip()
    raw = PAIR_RAW.get(key)
    if raw is None:
        raise UnknownRegistryKeyError("비교쌍", key, list(PAIR_RAW))
    return build_pair(key, raw)


def list_pairs() -> list[CrosscheckPair]:
    return [build_pair(name, raw) for name, raw in PAIR_RAW.items()]
