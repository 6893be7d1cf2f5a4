from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..formula import Formula, print_formula


@dataclass(frozen=True)
class CrosscheckPair:
    """같은 표본에 돌릴 두 판정기 (SemanticsSpec 문자열)."""

    name: str
    language: str
    left: str
    right: str
    single_premise: bool = False
    deduction: bool = False
    description: str = ""

    @property
    def min_premises(self) -> int:
        return 1 if self.single_premise or self.deduction else 0


@dataclass
class SampleOutcome:
    index: int
    premises: list[Formula]
    conclusion: Formula
    left_label: str = ""
    right_label: str = ""
    left_holds: Optional[bool] = None
    right_holds: Optional[bool] = None
    witness: str = ""
    skipped_reason: str = ""

    @property
    def skipped(self) -> bool:
        return bool(self.skipped_reason)

    @property
    def agrees(self) -> bool:
        return not self.skipped and self.left_holds == self.right_holds


@dataclass
class Disagreement:
    sample_index: int
    premises: list[Formula]
    conclusion: Formula
    left_verdict: str
    right_verdict: str
    witness: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "sample": self.sample_index,
            "premises": [print_formula(p) for p in self.premises],
            "conclusion": print_formula(self.conclusion),
            "left": self.left_verdict,
            "right": self.right_verdict,
            "witness": self.witness,
        }


@dataclass
class CrosscheckReport:
    """
    교차 검증 결과

    samples는 실제 비교한 표본 수 (requested - skipped), agreements + len(disagreements) == samples.
    """

    pair_name: str
    seed: int
    requested: int
    samples: int = 0
    agreements: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)
    left: str = ""
    right: str = ""
    language: str = ""

    @property
    def success(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> dict[str, Any]:
        return {
            "pair": self.pair_name,
            "left": self.left,
            "right": self.right,
            "language": self.language,
            "seed": self.seed,
            "requested": self.requested,
            "samples": self.samples,
            "agreements": self.agreements,
            "disagreements": [d.to_dict() for d in self.disagreements],
            "skipped": list(self.skipped),
        }

    def to_text(self) -> str:
        lines = [
            f"PAIR {self.pair_name} ({self.left} vs {self.right}, {self.language})",
            f"SEED {self.seed}",
            f"SAMPLES {self.samples}",
            f"AGREEMENTS {self.agreements}",
            f"DISAGREEMENTS {len(self.disagreements)}",
            f"SKIPPED {len(self.skipped)}",
        ]
        for d in self.disagreements:
            premises = " ; ".join(print_formula(p) for p in d.premises)
            lines.append(f"#{d.sample_index} [{premises}] => {print_formula(d.conclusion)}: {d.left_verdict} / {d.right_verdict}")
            lines.extend(f"  {row}" for row in d.witness.splitlines())
        return "\n".join(lines)


@dataclass
class NoncontainmentFact:
    name: str
    description: str
    formula: Formula
    kripke_label: str
    matrix_label: str
    witness: str
    confirmed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "formula": print_formula(self.formula),
            "kripke": self.kripke_label,
            "matrix": self.matrix_label,
            "witness": self.witness,
            "confirmed": self.confirmed,
        }


@dataclass
class NoncontainmentReport:
    facts: list[NoncontainmentFact] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return bool(self.facts) and all(f.confirmed for f in self.facts)

    def to_dict(self) -> dict[str, Any]:
        return {"confirmed": self.success, "facts": [f.to_dict() for f in self.facts]}

    def to_text(self) -> str:
        lines = []
        for fact in self.facts:
            status = "CONFIRMED" if fact.confirmed else "NOT CONFIRMED"
            lines.append(f"FACT {fact.name} {status}: {fact.description}")
            lines.append(f"  formula: {print_formula(fact.formula)}")
            lines.append(f"  kripke: {fact.kripke_label}")
            lines.append(f"  D2P-3: {fact.matrix_label}")
            lines.extend(f"  {row}" for row in fact.witness.splitlines())
        return "\n".join(lines)
