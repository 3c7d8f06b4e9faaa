"""N-separately summing estimate at N = m, checked one-sidedly on scalar forms."""

from typing import Any

import numpy as np

from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class SeparateSummingCheck(BaseCheck):
    """Searched (r_m,1)-summing sum of U vs A_r^(m-n) times the geometric mean of the ||U^S|| bounds.

    Instances:
    - Forms of order m (default 3, at least 2) with dims from --dim (default bh_dim)
    - n uniform in 1..m-1, r uniform in [1, 2]
    - Real unless --field says otherwise

    Both sides are one-sided estimates of the true quantities, so a
    failure is reported as inconclusive.
    """

    @property
    def name(self) -> str:
        return "separate"

    @property
    def kind(self) -> CheckKind:
        return "one-sided"

    def params(self, context: CheckContext) -> dict[str, Any]:
        return {"m": context.m, "dim": context.dim}

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        field = context.field or FieldTag.REAL
        m = max(int(context.m) if context.m is not None else 3, 2)
        dim = int(context.dim or context.settings.campaign.bh_dim)
        entries = self.random_entries(rng, (dim,) * m, field)
        return {
            "tensor": Tensor.from_array(entries, field).to_document(),
            "field": field.value,
            "n": int(rng.integers(1, m)),
            "r": float(rng.uniform(1.0, 2.0)),
            "family_seed": int(rng.integers(0, 2 ** 32)),
        }

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        U = self.form_of(instance)
        report = context.forms.separate_summing_diagnostic(
            U, instance["n"], instance["r"], seed=instance["family_seed"]
        )
        details = {
            "exponent": report.exponent,
            "constant": report.constant,
            "subsets": list(report.subsets),
            "subset_norms": list(report.subset_norms),
            "subset_exact": list(report.subset_exact),
        }
        return TrialOutcome(report.lhs, report.rhs, report.verdict, details)
