"""
CLI Module
명령행 진입점

stdout에는 보고서만 쓰고, 오류는 stderr에 한 줄로 남긴다.
종료 코드: 0 성립/유효, 1 실패/무효, 2 입력 오류.

Author: Discussive Lab
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from ..core.crosscheck import list_pairs
from ..core.errors import DiscussiveError
from ..utils.logger import setup_logger
from ..utils.settings import OUTPUT_FORMATS, get_settings_manager
from ..utils.version import APP_NAME, APP_VERSION
from .commands import EXIT_USAGE, CommandContext, CommandResult, run_command


def _add_entailment_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--semantics",
        required=True,
        help="<matrix-id> | kripke[:k] | routley:<forall|base|exists>[:k]",
    )
    sub.add_argument("--lang", help="언어 태그 (기본: 의미론에 맞는 언어)")
    sub.add_argument("--premise", action="append", default=[], help="전제 (여러 번 지정 가능)")
    sub.add_argument("formula", help="결론")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discussive-lab",
        description=f"{APP_NAME}: 토론 논리 판정기",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_VERSION}")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="출력 형식")
    parser.add_argument("--verbose", "-v", action="store_true", help="DEBUG 로그를 stderr에 출력")
    parser.add_argument("--log-file", action="store_true", help="로그 파일에도 기록")
    parser.add_argument("--log-dir", default=None, help="로그 파일 디렉토리")
    parser.add_argument("--config-dir", default=None, help="설정 디렉토리 (기본 ~/.discussive_lab)")

    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("parse", help="식을 파싱해 정규형으로 출력")
    p.add_argument("--lang", default=None)
    p.add_argument("formula")

    p = subs.add_parser("eval", help="행렬에서 식의 값 계산")
    p.add_argument("--matrix", required=True)
    p.add_argument("--assign", default="", help="예: p=i,q=1")
    p.add_argument("formula")

    _add_entailment_args(subs.add_parser("entails", help="귀결 판정"))
    _add_entailment_args(subs.add_parser("countermodel", help="반례 모델 출력"))

    p = subs.add_parser("check", help="Hilbert 유도 검사")
    p.add_argument("file")

    p = subs.add_parser("deduce", help="연역 정리 변환")
    p.add_argument("file", nargs="?")
    p.add_argument("--discharge", default=None, help="소거할 전제")
    p.add_argument("--output", default=None, help="변환된 유도를 저장할 경로")
    p.add_argument("--corpus", action="store_true", help="내장 유도 모음 전체를 변환해 재검사")

    p = subs.add_parser("crosscheck", help="두 판정기 교차 검증")
    p.add_argument("--pair", required=True, choices=[pair.name for pair in list_pairs()])
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--max-premises", type=int, default=None)
    p.add_argument("--output", default=None, help=".xlsx / .json / .txt 보고서")

    subs.add_parser("noncontainment", help="∨ 확장의 상호 비포함 확인")

    p = subs.add_parser("table", help="행렬 진리표")
    p.add_argument("--matrix", required=True)
    p.add_argument("formula")

    p = subs.add_parser("systems", help="Hilbert 체계 목록")
    p.add_argument("id", nargs="?", default=None)

    subs.add_parser("matrices", help="행렬 목록")

    p = subs.add_parser("config", help="설정 조회/변경")
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE")

    return parser


def _emit(result: CommandResult, output_format: str) -> None:
    if output_format == "json":
        print(json.dumps(result.data, ensure_ascii=False, indent=2))
    elif result.text:
        print(result.text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) if not isinstance(e.code, str) else EXIT_USAGE

    setup_logger(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        log_dir=args.log_dir,
        file_output=bool(args.log_file),
    )
    logger = logging.getLogger(__name__)

    try:
        manager = get_settings_manager(args.config_dir)
        ctx = CommandContext(settings=manager.settings, manager=manager)
        result = run_command(args.command, args, ctx)
        manager.flush()
    except (DiscussiveError, ValueError, OSError, RecursionError) as e:
        logger.debug(f"명령 실패: {type(e).__name__}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _emit(result, args.format or ctx.settings.output_format)
    return result.exit_code
