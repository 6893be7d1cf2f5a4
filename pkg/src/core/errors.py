"""
Errors Module
라이브러리 공통 예외 계층

판정 결과(성립/반례)는 값으로 반환하고, 예외는 입력 오류와 용량 초과에만 사용한다.

Author: Discussive Lab
"""

from __future__ import annotations

from typing import Optional


class DiscussiveError(Exception):
    """모든 라이브러리 예외의 기반 클래스."""


class FormulaSyntaxError(DiscussiveError):
    """논리식 구문 오류 (바이트 오프셋 포함)."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class LanguageError(DiscussiveError):
    """언어에 없는 연결사 사용 또는 언어 불일치."""

    def __init__(self, message: str, token: Optional[str] = None, offset: Optional[int] = None) -> None:
        suffix = f" (offset {offset})" if offset is not None else ""
        super().__init__(f"{message}{suffix}")
        self.token = token
        self.offset = offset


class UnmappedMetavariableError(DiscussiveError):
    """치환에 없는 메타변수."""

    def __init__(self, name: str) -> None:
        super().__init__(f"메타변수 {name}에 대한 치환이 없습니다")
        self.name = name


class ValuationError(DiscussiveError):
    """평가에 필요한 변수/세계가 없음."""


class ModelError(DiscussiveError):
    """모델 구조 불변식 위반 (예: star가 involution이 아님)."""


class CapacityError(DiscussiveError):
    """열거 한도를 넘는 요청."""

    def __init__(self, bits: int, limit: int, what: str = "enumeration") -> None:
        super().__init__(f"{what} 용량 초과: {bits} > {limit}")
        self.bits = bits
        self.limit = limit


class UnknownRegistryKeyError(DiscussiveError, KeyError):
    """등록되지 않은 행렬/체계/언어/비교쌍 식별자."""

    def __init__(self, kind: str, key: str, known: Optional[list[str]] = None) -> None:
        hint = f" (가능한 값: {', '.join(known)})" if known else ""
        DiscussiveError.__init__(self, f"알 수 없는 {kind}: {key}{hint}")
        self.kind = kind
        self.key = key

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class DerivationFormatError(DiscussiveError):
    """유도 파일 형식 오류."""

    def __init__(self, message: str, line_no: int) -> None:
        super().__init__(f"{line_no}행: {message}")
        self.line_no = line_no


class DeductionError(DiscussiveError):
    """연역 정리 변환 입력 오류."""
