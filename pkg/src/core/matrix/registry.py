from __future__ import annotations

from typing import Any

from ..errors import UnknownRegistryKeyError
from ..formula import Connective, lookup_language
from .models import Matrix, TruthValue


_D2_THREE = "1i0"
_D2_FOUR = "1ij0"
_BELNAP = "tbnf"

# 단항 표: 값 순서대로의 결과 문자열. 이항 표: 행(왼쪽 인수)마다 열 순서의 결과 문자열.
_NEG_3 = "0i1"
_NEG_4 = "0ji1"
_IMP_3 = ["1i0", "1i0", "111"]
_IMP_4 = ["1ij0", "1ij0", "1ij0", "1111"]
_CONJ_R_3 = ["110", "ii0", "000"]
_CONJ_R_4 = ["1110", "iii0", "jjj0", "0000"]
_CONJ_L_3 = ["1i0", "1i0", "000"]
_CONJ_L_4 = ["1ij0", "1ij0", "1ij0", "0000"]
_DNEG_3 = "011"
_DNEG_4 = "0111"
_DISJ_3 = ["111", "1ii", "1i0"]
_BD_NEG = "fbnt"
_BD_DISJ = ["tttt", "tbtb", "ttnn", "tbnf"]
_BD_CONJ = ["tbnf", "bbff", "nfnf", "ffff"]


MATRIX_RAW: dict[str, dict[str, Any]] = {
    "D2M-3": {
        "language": "Lr-",
        "values": _D2_THREE,
        "designated": "1i",
        "tables": {"~": _NEG_3, "->": _IMP_3, "&r": _CONJ_R_3},
        "description": "three-valued interpretation of the disjunction-free discussive logic",
    },
    "D2M-4": {
        "language": "Lr-",
        "values": _D2_FOUR,
        "designated": "1ij",
        "tables": {"~": _NEG_4, "->": _IMP_4, "&r": _CONJ_R_4},
        "description": "four-valued interpretation (two-world discussive models)",
    },
    "D2L-3": {
        "language": "Ll-",
        "values": _D2_THREE,
        "designated": "1i",
        "tables": {"~": _NEG_3, "->": _IMP_3, "&l": _CONJ_L_3},
        "description": "three-valued tables with the left discussive conjunction",
    },
    "D2L-4": {
        "language": "Ll-",
        "values": _D2_FOUR,
        "designated": "1ij",
        "tables": {"~": _NEG_4, "->": _IMP_4, "&l": _CONJ_L_4},
        "description": "four-valued tables with the left discussive conjunction",
    },
    "NC-3": {
        "language": "L-NC",
        "values": _D2_THREE,
        "designated": "1i",
        "tables": {"~": _NEG_3, "->": _IMP_3},
        "description": "negation-conditional fragment",
    },
    "DN-3": {
        "language": "L-DN",
        "values": _D2_THREE,
        "designated": "1i",
        "tables": {"~d": _DNEG_3, "->": _IMP_3, "&r": _CONJ_R_3},
        "description": "discussive negation joined with the three-valued conditional and conjunction",
    },
    "DN-4": {
        "language": "L-DN",
        "values": _D2_FOUR,
        "designated": "1ij",
        "tables": {"~d": _DNEG_4, "->": _IMP_4, "&r": _CONJ_R_4},
        "description": "discussive negation joined with the four-valued conditional and conjunction",
    },
    "D2P-3": {
        "language": "Lr",
        "values": _D2_THREE,
        "designated": "1i",
        "tables": {"~": _NEG_3, "|": _DISJ_3, "->": _IMP_3, "&r": _CONJ_R_3},
        "description": "three-valued tables of the expansion with disjunction",
    },
    "BD-4-FDE": {
        "language": "L-FDE",
        "values": _BELNAP,
        "designated": "tb",
        "tables": {"~": _BD_NEG, "|": _BD_DISJ, "&": _BD_CONJ},
        "description": "Belnap-Dunn values, truth preserved (t, b)",
    },
    "BD-4-NFL": {
        "language": "L-FDE",
        "values": _BELNAP,
        "designated": "tbn",
        "tables": {"~": _BD_NEG, "|": _BD_DISJ, "&": _BD_CONJ},
        "description": "Belnap-Dunn values, non-falsity preserved (t, b, n)",
    },
    "BD-4-ETL": {
        "language": "L-FDE",
        "values": _BELNAP,
        "designated": "t",
        "tables": {"~": _BD_NEG, "|": _BD_DISJ, "&": _BD_CONJ},
        "description": "Belnap-Dunn values, exactly true preserved (t)",
    },
}


def _symbols(text: str) -> tuple[TruthValue, ...]:
    return tuple(TruthValue.from_symbol(ch) for ch in text)


def build_matrix(matrix_id: str, raw: dict[str, Any]) -> Matrix:
    values = _symbols(raw["values"])
    unary: dict[Connective, dict[TruthValue, TruthValue]] = {}
    binary: dict[Connective, dict[tuple[TruthValue, TruthValue], TruthValue]] = {}
    for symbol, table in raw["tables"].items():
        conn = Connective(symbol)
        if conn.arity == 1:
            unary[conn] = dict(zip(values, _symbols(table)))
        else:
            binary[conn] = {
                (row_value, col_value): cell
                for row_value, row in zip(values, table)
                for col_value, cell in zip(values, _symbols(row))
            }
    return Matrix(
        matrix_id=matrix_id,
        language=lookup_language(raw["language"]),
        values=values,
        designated=frozenset(_symbols(raw["designated"])),
        unary=unary,
        binary=binary,
        description=str(raw.get("description", "")),
    )


_MATRICES: dict[str, Matrix] = {key: build_matrix(key, raw) for key, raw in MATRIX_RAW.items()}


def lookup_matrix(matrix_id: str) -> Matrix:
    key = str(matrix_id or "").strip()
    matrix = _MATRICES.get(key)
    if matrix is None:
        raise UnknownRegistryKeyError("행렬", key, list(_MATRICES))
    return matrix


def list_matrices() -> list[Matrix]:
    return list(_MATRICES.values())
