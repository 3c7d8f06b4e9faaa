from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Optional


@dataclass(frozen=True)
class TrialOutcome:
    """Result of evaluating one check instance.

    Attributes:
        lhs: Left side of the inequality (for ratio checks, the measured ratio).
        rhs: Right side, or the bound the left side is compared with.
        verdict: "holds", "violated" or "inconclusive".
        details: Extra numbers worth keeping in a witness (norms, weights, ...).
    """

    lhs: float
    rhs: float
    verdict: str
    details: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def ratio(self) -> float:
        if self.rhs == 0.0:
            return 0.0 if self.lhs == 0.0 else float("inf")
        return self.lhs / self.rhs

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def to_document(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "slack": self.slack,
            "verdict": self.verdict,
            "details": dict(self.details),
        }


@dataclass
class FuzzReport:
    """Aggregate of a seeded verification campaign.

    Serialized as {check, seed, trials, field, params, worst_ratio, verdict,
    witness, messages}. ``worst_ratio`` is the largest lhs/rhs over the trials
    and the witness is the instance that attained it, at full precision.
    ``messages`` holds the newest messenger entries for trials that did not
    hold.
    """

    check: str
    seed: int
    trials: int
    field: str
    params: dict[str, Any]
    worst_ratio: float = float("-inf")
    worst_slack: float = float("inf")
    verdict: str = "holds"
    violations: int = 0
    inconclusive: int = 0
    witness: Optional[dict[str, Any]] = None
    messages: list[dict[str, Any]] = dc_field(default_factory=list)

    @property
    def hard_violation(self) -> bool:
        return self.violations > 0
