from __future__ import annotations

from collections.abc import Iterable, Mapping

from ..errors import LanguageError, UnmappedMetavariableError
from .language import LanguageTag, lookup_language
from .models import Atom, Binary, Connective, Formula, Meta, Unary


def subformulas(f: Formula) -> tuple[Formula, ...]:
    """후위 순회 순서의 서로 다른 부분식 (중복 제거)."""

    seen: dict[Formula, None] = {}

    def visit(node: Formula) -> None:
        if isinstance(node, Unary):
            visit(node.child)
        elif isinstance(node, Binary):
            visit(node.left)
            visit(node.right)
        if node not in seen:
            seen[node] = None

    visit(f)
    return tuple(seen)


def subformulas_of_all(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    seen: dict[Formula, None] = {}
    for f in formulas:
        for sub in subformulas(f):
            seen.setdefault(sub, None)
    return tuple(seen)


def variables(f: Formula) -> tuple[str, ...]:
    """정렬된 명제 변수 이름."""

    names: set[str] = set()
    _collect(f, Atom, names)
    return tuple(sorted(names))


def variables_of_all(formulas: Iterable[Formula]) -> tuple[str, ...]:
    names: set[str] = set()
    for f in formulas:
        _collect(f, Atom, names)
    return tuple(sorted(names))


def metavariables(f: Formula) -> tuple[str, ...]:
    names: set[str] = set()
    _collect(f, Meta, names)
    return tuple(sorted(names))


def _collect(f: Formula, kind: type, names: set[str]) -> None:
    if isinstance(f, kind):
        names.add(f.name)  # type: ignore[attr-defined]
    elif isinstance(f, Unary):
        _collect(f.child, kind, names)
    elif isinstance(f, Binary):
        _collect(f.left, kind, names)
        _collect(f.right, kind, names)


def connectives_of(f: Formula) -> frozenset[Connective]:
    found: set[Connective] = set()
    stack: list[Formula] = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Unary):
            found.add(node.conn)
            stack.append(node.child)
        elif isinstance(node, Binary):
            found.add(node.conn)
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def check_language(f: Formula, lang: "str | LanguageTag") -> None:
    """f가 lang의 연결사만 쓰는지 확인 (아니면 LanguageError)."""

    tag = lookup_language(lang)
    foreign = sorted(c.value for c in connectives_of(f) - tag.connectives)
    if foreign:
        raise LanguageError(f"연결사 {', '.join(foreign)}는 언어 {tag.name}에 없습니다", token=foreign[0])


def depth(f: Formula) -> int:
    if isinstance(f, Unary):
        return 1 + depth(f.child)
    if isinstance(f, Binary):
        return 1 + max(depth(f.left), depth(f.right))
    return 0


def size(f: Formula) -> int:
    if isinstance(f, Unary):
        return 1 + size(f.child)
    if isinstance(f, Binary):
        return 1 + size(f.left) + size(f.right)
    return 1


def substitute(schema: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """메타변수 동시 치환. 매핑에 없는 메타변수는 UnmappedMetavariableError."""

    if isinstance(schema, Meta):
        if schema.name not in mapping:
            raise UnmappedMetavariableError(schema.name)
        return mapping[schema.name]
    if isinstance(schema, Unary):
        return Unary(schema.conn, substitute(schema.child, mapping))
    if isinstance(schema, Binary):
        return Binary(schema.conn, substitute(schema.left, mapping), substitute(schema.right, mapping))
    return schema


def rename_connective(f: Formula, source: Connective, target: Connective) -> Formula:
    """모든 source 연결사를 target으로 바꾼 식 (변형 체계 생성용)."""

    if isinstance(f, Unary):
        conn = target if f.conn is source else f.conn
        return Unary(conn, rename_connective(f.child, source, target))
    if isinstance(f, Binary):
        conn = target if f.conn is source else f.conn
        return Binary(conn, rename_connective(f.left, source, target), rename_connective(f.right, source, target))
    return f
