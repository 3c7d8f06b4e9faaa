from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING, Any

from bh_lab.domain.errors import ParameterRangeError
from bh_lab.domain.model.fuzz_report import FuzzReport, TrialOutcome
from bh_lab.engine.services.rng_service import RngService

if TYPE_CHECKING:
    from bh_lab.engine.checks.base import BaseCheck
    from bh_lab.engine.checks.context import CheckContext
    from bh_lab.engine.checks.registry import CheckRegistry

logger = logging.getLogger(__name__)


class CampaignService:
    """Runs seeded verification campaigns and replays their witnesses.

    Trial i draws its instance from the generator keyed by (seed, trial i),
    so reports depend only on (check, parameters, seed, trials). The
    aggregation is order independent: max ratio, min slack and counts.
    """

    def __init__(self, registry: "CheckRegistry"):
        self.registry = registry

    def run(self, check_name: str, context: "CheckContext", trials: int, seed: int) -> FuzzReport:
        check = self.registry.require(check_name)
        trials = int(trials)
        if trials < 1:
            raise ParameterRangeError(f"A campaign needs at least one trial, got {trials}")
        rng_service = RngService(seed)
        report = FuzzReport(
            check=check.name,
            seed=rng_service.seed,
            trials=trials,
            field=context.field.value if context.field is not None else "mixed",
            params={"tol": context.tol, **check.params(context)},
        )
        messenger = context.messenger
        for i in range(trials):
            instance = check.sample(rng_service.trial(i), context)
            outcome = check.evaluate(instance, context)
            self._accumulate(report, check, i, instance, outcome)
            if outcome.verdict != "holds" and messenger is not None:
                log = messenger.error if outcome.verdict == "violated" else messenger.warn
                report.messages.append(log(
                    f"trial {i}: {outcome.verdict} (lhs={outcome.lhs!r}, rhs={outcome.rhs!r})",
                    tag=check.name,
                    ctx={"trial": i},
                ))
                del report.messages[:-messenger.limit]
        if report.violations:
            report.verdict = "violated"
        elif report.inconclusive:
            report.verdict = "inconclusive"
        logger.info("%s: %d trials, worst ratio %r, verdict %s", check.name, trials, report.worst_ratio, report.verdict)
        return report

    @staticmethod
    def _accumulate(report: FuzzReport, check: "BaseCheck", trial: int,
                    instance: dict[str, Any], outcome: TrialOutcome) -> None:
        if outcome.verdict == "violated":
            report.violations += 1
        elif outcome.verdict == "inconclusive":
            report.inconclusive += 1
        report.worst_slack = min(report.worst_slack, outcome.slack)
        report.worst_ratio = max(report.worst_ratio, outcome.ratio)
        # a violation beats any non-violation; ties are broken by the larger ratio
        rank = (outcome.verdict == "violated", outcome.ratio)
        current = report.witness
        if current is None or rank > (current["outcome"]["verdict"] == "violated", current["outcome"]["ratio"]):
            report.witness = {
                "check": check.name,
                "trial": trial,
                "instance": instance,
                "outcome": outcome.to_document(),
            }

    def replay(self, document: dict[str, Any], context: "CheckContext") -> tuple[TrialOutcome, float]:
        """Re-evaluate a witness (or a report holding one).

        Returns the fresh outcome and the absolute difference between its
        slack and the recorded slack.
        """
        witness = document.get("witness", document)
        if not isinstance(witness, dict) or "instance" not in witness:
            raise ParameterRangeError("Document holds no witness instance")
        check = self.registry.require(witness.get("check") or document.get("check"))
        outcome = check.evaluate(witness["instance"], context)
        recorded = witness.get("outcome", {}).get("slack")
        drift = math.nan if recorded is None else abs(outcome.slack - float(recorded))
        return outcome, drift
