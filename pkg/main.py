"""
Discussive Lab - 토론 논리 판정 도구
프로그램 진입점

Author: Discussive Lab
"""

import sys

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
