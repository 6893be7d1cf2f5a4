from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from ...utils.atomic_write import atomic_write_text
from ..errors import DerivationFormatError, FormulaSyntaxError, LanguageError
from ..formula import UNRESTRICTED, Formula, LanguageTag, parse, print_formula
from .catalog import list_system
from .models import Derivation, DerivationLine, Justification


_HEADER_RE = re.compile(r"^(system|premises)\s*:\s*(.*)$", re.IGNORECASE)
_LINE_RE = re.compile(r"^(\d+)\.\s+(.+?)\s*\[([^\]]+)\]$")
_MP_RE = re.compile(r"^mp\s+(\d+)\s+(\d+)$")


def _parse_formula(text: str, lang: LanguageTag, line_no: int) -> Formula:
    try:
        return parse(text, lang)
    except LanguageError:
        # 언어 위반은 검사 단계에서 wrong-language로 보고한다
        try:
            return parse(text, UNRESTRICTED)
        except FormulaSyntaxError as e:
            raise DerivationFormatError(str(e), line_no) from None
    except FormulaSyntaxError as e:
        raise DerivationFormatError(str(e), line_no) from None


def _parse_justification(text: str, line_no: int) -> Justification:
    token = " ".join(text.strip().lower().split())
    if token == "premise":
        return Justification.premise()
    if token == "axiom":
        return Justification.axiom()
    match = _MP_RE.match(token)
    if match:
        return Justification.mp(int(match.group(1)), int(match.group(2)))
    if token.startswith("ax") and len(token) > 2 and " " not in token:
        return Justification.axiom("Ax" + token[2:])
    raise DerivationFormatError(f"알 수 없는 근거: [{text}]", line_no)


def parse_derivation(text: str) -> Derivation:
    """
    유도 텍스트 파싱

    형식:
        system: D2-MINUS
        premises: p ; p -> q
        1. p  [premise]
        2. p -> q  [premise]
        3. q  [mp 1 2]
    """
    system_id = ""
    premise_text: tuple[str, int] = ("", 0)
    raw_lines: list[tuple[int, re.Match[str]]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _HEADER_RE.match(line)
        if header:
            key = header.group(1).lower()
            if key == "system":
                system_id = header.group(2).strip()
            else:
                premise_text = (header.group(2).strip(), line_no)
            continue
        body = _LINE_RE.match(line)
        if body is None:
            raise DerivationFormatError(f"줄 형식을 읽을 수 없습니다: {line}", line_no)
        raw_lines.append((line_no, body))

    if not system_id:
        raise DerivationFormatError("system: 헤더가 없습니다", 1)
    system = list_system(system_id)

    premises: list[Formula] = []
    text_value, premise_line = premise_text
    for chunk in text_value.split(";"):
        if chunk.strip():
            premises.append(_parse_formula(chunk.strip(), system.language, premise_line))

    lines: list[DerivationLine] = []
    for expected, (line_no, body) in enumerate(raw_lines, start=1):
        if int(body.group(1)) != expected:
            raise DerivationFormatError(f"줄 번호는 {expected}이어야 합니다 (읽은 값 {body.group(1)})", line_no)
        formula = _parse_formula(body.group(2), system.language, line_no)
        lines.append(DerivationLine(formula, _parse_justification(body.group(3), line_no)))

    if not lines:
        raise DerivationFormatError("유도에 줄이 없습니다", len(text.splitlines()))
    return Derivation(system_id=system.system_id, premises=tuple(premises), lines=tuple(lines))


def load_derivation(path: Union[str, Path]) -> Derivation:
    return parse_derivation(Path(path).read_text(encoding="utf-8"))


def render_derivation(d: Derivation) -> str:
    premises = " ; ".join(print_formula(p) for p in d.premises)
    out = [f"system: {d.system_id}", f"premises: {premises}".rstrip()]
    for line_no, line in enumerate(d.lines, start=1):
        out.append(f"{line_no}. {print_formula(line.formula)}  [{line.justification.render()}]")
    return "\n".join(out) + "\n"


def save_derivation(d: Derivation, path: Union[str, Path]) -> Path:
    target = Path(path)
    atomic_write_text(target, render_derivation(d))
    return target
