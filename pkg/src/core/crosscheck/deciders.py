from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

from ..errors import UnknownRegistryKeyError
from ..formula import Formula, LanguageTag
from ..kripke import DEFAULT_BIT_LIMIT, SearchVerdict, StarMode, entails_discussive, routley_entails
from ..matrix import DEFAULT_VARIABLE_LIMIT, MatrixVerdict, entails_matrix, lookup_matrix

Verdict = Union[MatrixVerdict, SearchVerdict]


@dataclass(frozen=True)
class SemanticsSpec:
    """
    귀결 판정기 지정

    문자열 형식: `<matrix-id>`, `kripke[:k]`, `routley:<mode>[:k]`
    """

    kind: str
    matrix_id: str = ""
    mode: Optional[StarMode] = None
    max_worlds: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "SemanticsSpec":
        parts = [part.strip() for part in str(text or "").strip().split(":")]
        head = parts[0].lower()
        try:
            if head == "kripke" and len(parts) <= 2:
                return cls("kripke", max_worlds=int(parts[1]) if len(parts) == 2 else None)
            if head == "routley" and len(parts) in (2, 3):
                mode = StarMode.from_value(parts[1])
                return cls("routley", mode=mode, max_worlds=int(parts[2]) if len(parts) == 3 else None)
        except ValueError as e:
            raise UnknownRegistryKeyError("의미론", text, ["<matrix-id>", "kripke[:k]", "routley:<mode>[:k]"]) from e
        if len(parts) == 1:
            matrix = lookup_matrix(parts[0])
            return cls("matrix", matrix_id=matrix.matrix_id)
        raise UnknownRegistryKeyError("의미론", text, ["<matrix-id>", "kripke[:k]", "routley:<mode>[:k]"])

    def render(self) -> str:
        if self.kind == "matrix":
            return self.matrix_id
        bound = f":{self.max_worlds}" if self.max_worlds is not None else ""
        if self.kind == "kripke":
            return f"kripke{bound}"
        mode = self.mode.value if self.mode else ""
        return f"routley:{mode}{bound}"


def decide(
    spec: Union[str, SemanticsSpec],
    premises: Sequence[Formula],
    conclusion: Formula,
    lang: "str | LanguageTag",
    *,
    bit_limit: int = DEFAULT_BIT_LIMIT,
    variable_limit: int = DEFAULT_VARIABLE_LIMIT,
) -> Verdict:
    """
    지정된 의미론으로 귀결 판정

    routley는 전제가 정확히 하나여야 한다 (ValueError).
    """
    semantics = spec if isinstance(spec, SemanticsSpec) else SemanticsSpec.parse(spec)
    if semantics.kind == "matrix":
        return entails_matrix(
            lookup_matrix(semantics.matrix_id),
            premises,
            conclusion,
            variable_limit=variable_limit,
        )
    if semantics.kind == "kripke":
        return entails_discussive(premises, conclusion, lang, semantics.max_worlds, bit_limit=bit_limit)
    if len(premises) != 1:
        raise ValueError(f"Routley 귀결은 전제가 하나여야 합니다 (받은 개수 {len(premises)})")
    assert semantics.mode is not None
    return routley_entails(
        premises[0],
        conclusion,
        semantics.mode,
        semantics.max_worlds if semantics.max_worlds is not None else 2,
        bit_limit=bit_limit,
    )
