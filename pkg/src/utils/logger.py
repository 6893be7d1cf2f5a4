"""
Logger Module
로깅 설정

표준 출력은 판정 보고서 전용이므로 콘솔 로그는 stderr로 보낸다.

Author: Discussive Lab
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional


# 패키지 루트 로거. 모듈 로거 (logging.getLogger(__name__))가 모두 여기로 전파된다.
LOGGER_NAME = "src"
LOG_FILE_PREFIX = "discussive_lab"
LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"


def default_log_dir() -> Path:
    return Path.home() / ".discussive_lab" / "logs"


def setup_logger(
    name: str = LOGGER_NAME,
    level: int = logging.WARNING,
    log_dir: Optional[str] = None,
    console_output: bool = True,
    file_output: bool = False,
) -> logging.Logger:
    """
    로거 설정

    Args:
        name: 로거 이름
        level: 로그 레벨
        log_dir: 로그 파일 디렉토리 (기본 ~/.discussive_lab/logs)
        console_output: stderr 출력 여부
        file_output: 날짜별 파일 출력 여부

    Returns:
        설정된 Logger 객체
    """
    logger = logging.getLogger(name)

    # 이미 핸들러가 있으면 레벨만 맞춘다
    if logger.handlers:
        set_level(logger, level)
        return logger

    logger.setLevel(level)
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    if file_output:
        log_path = Path(log_dir) if log_dir else default_log_dir()
        log_path.mkdir(parents=True, exist_ok=True)
        log_file = log_path / f"{LOG_FILE_PREFIX}_{datetime.now().strftime('%Y%m%d')}.log"

        file_handler = logging.FileHandler(str(log_file), encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_level(logger: logging.Logger, level: int) -> None:
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def get_logger(name: str = LOGGER_NAME) -> logging.Logger:
    """기존 로거 가져오기"""
    return logging.getLogger(name)


class LogCapture:
    """
    로그 메시지 캡처 (테스트용)

    Usage:
        with LogCapture("src.core.kripke") as capture:
            ...
        messages = capture.messages
    """

    def __init__(self, logger_name: str = LOGGER_NAME, level: int = logging.DEBUG):
        self._logger = logging.getLogger(logger_name)
        self._level = level
        self._previous_level = self._logger.level
        self._handler: Optional[logging.Handler] = None
        self.messages: list[str] = []

    def __enter__(self):
        class ListHandler(logging.Handler):
            def __init__(self, message_list: list[str]):
                super().__init__()
                self.message_list = message_list

            def emit(self, record):
                self.message_list.append(self.format(record))

        self._handler = ListHandler(self.messages)
        self._handler.setLevel(self._level)
        self._handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        self._previous_level = self._logger.level
        self._logger.setLevel(self._level)
        self._logger.addHandler(self._handler)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self._handler:
            self._logger.removeHandler(self._handler)
        self._logger.setLevel(self._previous_level)
        return False
