from __future__ import annotations

from .models import Atom, Binary, Connective, Formula, Meta, Unary


_ATOMIC_PRECEDENCE = 5


def _precedence(f: Formula) -> int:
    if isinstance(f, (Atom, Meta)):
        return _ATOMIC_PRECEDENCE
    return f.conn.precedence


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def print_formula(f: Formula) -> str:
    """최소 괄호 출력. parse(print_formula(f), lang) == f 를 만족한다."""

    if isinstance(f, (Atom, Meta)):
        return f.name

    if isinstance(f, Unary):
        child = _wrap(print_formula(f.child), isinstance(f.child, Binary))
        if f.conn is Connective.DNEG:
            return f"~d {child}"
        # "~d" 토큰과 겹치지 않도록 d로 시작하면 띄운다
        return f"~ {child}" if child.startswith("d") else f"~{child}"

    prec = f.conn.precedence
    left_prec = _precedence(f.left)
    right_prec = _precedence(f.right)
    if f.conn is Connective.IMP:
        # 우결합
        left_needs = left_prec <= prec
        right_needs = right_prec < prec
    else:
        left_needs = left_prec < prec
        right_needs = right_prec <= prec
    left = _wrap(print_formula(f.left), left_needs)
    right = _wrap(print_formula(f.right), right_needs)
    return f"{left} {f.conn.value} {right}"
