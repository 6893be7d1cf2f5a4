"""
Formula Parser Module
ASCII 논리식 문법 (pyparsing 토큰화 + 우선순위 접기)

우선순위 (강한 것부터): 단항 `~` `~d` / `&r` `&l` `&` / `|` / `->` (우결합) / `<->` (설탕).
토큰은 pyparsing으로 한 줄로 읽고, 구조는 스택으로 접으므로 중첩 깊이가 파이썬 재귀 한도에 묶이지 않는다.

Author: Discussive Lab
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import pyparsing as pp

from ..errors import FormulaSyntaxError, LanguageError
from .language import LanguageTag, lookup_language, require_connective
from .models import Atom, Binary, Connective, Formula, Meta, Unary


_PARSE_LOCK = threading.Lock()

_IDENT_TAIL = r"(?![a-z0-9_])"

# `<->` 는 가장 약하게 결합한다
_IFF_PRECEDENCE = 0


@dataclass(frozen=True)
class _Token:
    kind: str  # atom / meta / unary / binary / lparen / rparen
    text: str
    loc: int
    conn: Optional[Connective] = None

    @property
    def precedence(self) -> int:
        return self.conn.precedence if self.conn is not None else _IFF_PRECEDENCE

    @property
    def right_assoc(self) -> bool:
        return self.conn is Connective.IMP


def _token(expr: pp.ParserElement, kind: str, conn: Optional[Connective] = None) -> pp.ParserElement:
    return expr.set_parse_action(lambda s, loc, toks: _Token(kind, toks[0], loc, conn))


@lru_cache(maxsize=None)
def _lexer(schema: bool) -> pp.ParserElement:
    alternatives = [
        _token(pp.Regex(r"~d" + _IDENT_TAIL), "unary", Connective.DNEG),
        _token(pp.Literal("~"), "unary", Connective.NEG),
        _token(pp.Regex(r"&r" + _IDENT_TAIL), "binary", Connective.CONJ_R),
        _token(pp.Regex(r"&l" + _IDENT_TAIL), "binary", Connective.CONJ_L),
        _token(pp.Literal("&"), "binary", Connective.CONJ),
        _token(pp.Literal("|"), "binary", Connective.DISJ),
        _token(pp.Literal("<->"), "binary"),
        _token(pp.Literal("->"), "binary", Connective.IMP),
        _token(pp.Literal("("), "lparen"),
        _token(pp.Literal(")"), "rparen"),
        _token(pp.Regex(r"[a-z][a-z0-9_]*"), "atom"),
    ]
    if schema:
        alternatives.append(_token(pp.Regex(r"[A-Z][A-Z0-9_]*"), "meta"))
    token = pp.MatchFirst(alternatives).set_name("token")
    return pp.ZeroOrMore(token)


def _byte_offset(text: str, loc: int) -> int:
    return len(text[: max(0, loc)].encode("utf-8"))


def _tokenize(text: str, schema: bool) -> list[_Token]:
    try:
        with _PARSE_LOCK:
            result = _lexer(schema).parse_string(text, parse_all=True)
    except pp.ParseException as exc:
        raise FormulaSyntaxError(f"알 수 없는 문자: {text[exc.loc:exc.loc + 1]!r}", _byte_offset(text, exc.loc)) from None
    return list(result)


def _check_operator(tok: _Token, lang: LanguageTag, text: str) -> None:
    offset = _byte_offset(text, tok.loc)
    if tok.conn is not None:
        require_connective(lang, tok.conn, offset)
    elif lang.biconditional_conjunction is None:
        raise LanguageError(f"언어 {lang.name}에는 '<->'를 펼칠 담론 연언이 없습니다", token=tok.text, offset=offset)


def _reduce(lang: LanguageTag, tok: _Token, operands: list[Formula]) -> None:
    if tok.kind == "unary":
        assert tok.conn is not None
        operands.append(Unary(tok.conn, operands.pop()))
        return
    right = operands.pop()
    left = operands.pop()
    if tok.conn is None:
        # <-> 는 노드가 아니라 (A -> B) * (B -> A) 로 펼친다.
        bicond = lang.biconditional_conjunction
        assert bicond is not None
        operands.append(Binary(bicond, Binary(Connective.IMP, left, right), Binary(Connective.IMP, right, left)))
        return
    operands.append(Binary(tok.conn, left, right))


def _fold(tokens: list[_Token], lang: LanguageTag, text: str) -> Formula:
    operands: list[Formula] = []
    pending: list[_Token] = []
    expect_operand = True

    for tok in tokens:
        if expect_operand:
            if tok.kind == "atom":
                operands.append(Atom(tok.text))
                expect_operand = False
            elif tok.kind == "meta":
                operands.append(Meta(tok.text))
                expect_operand = False
            elif tok.kind == "unary":
                _check_operator(tok, lang, text)
                pending.append(tok)
            elif tok.kind == "lparen":
                pending.append(tok)
            else:
                raise FormulaSyntaxError(f"피연산자가 필요한 위치에 {tok.text!r}", _byte_offset(text, tok.loc))
            continue

        if tok.kind == "binary":
            _check_operator(tok, lang, text)
            while pending and pending[-1].kind != "lparen":
                top = pending[-1]
                if top.precedence > tok.precedence or (top.precedence == tok.precedence and not tok.right_assoc):
                    _reduce(lang, pending.pop(), operands)
                else:
                    break
            pending.append(tok)
            expect_operand = True
        elif tok.kind == "rparen":
            while pending and pending[-1].kind != "lparen":
                _reduce(lang, pending.pop(), operands)
            if not pending:
                raise FormulaSyntaxError("짝이 맞지 않는 ')'", _byte_offset(text, tok.loc))
            pending.pop()
        else:
            raise FormulaSyntaxError(f"연산자가 필요한 위치에 {tok.text!r}", _byte_offset(text, tok.loc))

    if expect_operand:
        raise FormulaSyntaxError("식이 끝나기 전에 피연산자가 필요합니다", _byte_offset(text, len(text)))
    while pending:
        tok = pending.pop()
        if tok.kind == "lparen":
            raise FormulaSyntaxError("닫히지 않은 '('", _byte_offset(text, tok.loc))
        _reduce(lang, tok, operands)
    return operands[0]


def parse(text: str, lang: Union[str, LanguageTag], *, schema: bool = False) -> Formula:
    """
    논리식 파싱

    Args:
        text: ASCII 논리식
        lang: 언어 태그 (이름 또는 LanguageTag)
        schema: True면 대문자 메타변수(A, B, C ...)를 허용

    Raises:
        FormulaSyntaxError: 구문 오류 (바이트 오프셋 포함)
        LanguageError: 언어에 없는 연결사
    """
    tag = lookup_language(lang)
    source = str(text or "")
    if not source.strip():
        raise FormulaSyntaxError("빈 식", 0)
    return _fold(_tokenize(source, schema), tag, source)


def parse_schema(text: str, lang: Union[str, LanguageTag]) -> Formula:
    return parse(text, lang, schema=True)
