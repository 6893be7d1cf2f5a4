"""
Performance smoke checks for the crosscheck harness.

Usage:
    python scripts/perf_smoke.py
"""

from __future__ import annotations

import json
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path


PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

SMOKE_SAMPLES = 300
SMOKE_PAIRS = ("3v-vs-kripke", "star-vs-bd:base", "deduction-3v")


def _crosscheck_ms(pair: str, workers: int) -> tuple[float, int]:
    from src.core.crosscheck import crosscheck

    t0 = time.perf_counter()
    report = crosscheck(pair, samples=SMOKE_SAMPLES, workers=workers)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return elapsed_ms, len(report.disagreements)


def measure_import_ms() -> float:
    import importlib

    t0 = time.perf_counter()
    importlib.import_module("src.core")
    return (time.perf_counter() - t0) * 1000.0


@dataclass
class PerfSummary:
    import_core_ms: float
    samples_per_pair: int
    serial_ms: dict[str, float]
    threaded_ms: dict[str, float]
    disagreements: dict[str, int]


def median(values: list[float]) -> float:
    return float(statistics.median(values))


def main() -> int:
    import_ms = measure_import_ms()
    serial: dict[str, float] = {}
    threaded: dict[str, float] = {}
    disagreements: dict[str, int] = {}

    for pair in SMOKE_PAIRS:
        runs = [_crosscheck_ms(pair, workers=1) for _ in range(3)]
        serial[pair] = median([ms for ms, _ in runs])
        disagreements[pair] = max(count for _, count in runs)
        threaded[pair] = median([_crosscheck_ms(pair, workers=4)[0] for _ in range(3)])

    summary = PerfSummary(
        import_core_ms=import_ms,
        samples_per_pair=SMOKE_SAMPLES,
        serial_ms=serial,
        threaded_ms=threaded,
        disagreements=disagreements,
    )

    print(json.dumps(asdict(summary), ensure_ascii=False, indent=2))
    return 1 if any(disagreements.values()) else 0


if __name__ == "__main__":
    raise SystemExit(main())
