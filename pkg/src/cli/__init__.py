"""
CLI Package
명령행 인터페이스
"""

from .app import build_parser, main
from .commands import EXIT_FAILS, EXIT_OK, EXIT_USAGE, HANDLERS, CommandContext, CommandResult, run_command

__all__ = [
    "build_parser",
    "CommandContext",
    "CommandResult",
    "EXIT_FAILS",
    "EXIT_OK",
    "EXIT_USAGE",
    "HANDLERS",
    "main",
    "run_command",
]
