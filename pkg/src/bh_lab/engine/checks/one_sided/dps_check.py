"""Block-exponent diagnostic - one-sided check of the scalar multiple-exponent summing estimate."""

from typing import Any

import numpy as np

from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.ordered_partition import OrderedPartition
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class DpsCheck(BaseCheck):
    """Block mixed norm of U over weak-normalized families vs the product of block bounds.

    Instances:
    - Real forms of order m (default 3) with dims from --dim (default bh_dim)
    - Blocks: {1,2}{3} for m = 3, otherwise a random ordered split into 2 blocks
    - r_k uniform in [bh_exponent(|C_k|, t), 2)

    The right side mixes exact and upper-bound quantities while the left
    side is searched from below, so a failure is reported as inconclusive.
    """

    @property
    def name(self) -> str:
        return "dps"

    @property
    def kind(self) -> CheckKind:
        return "one-sided"

    def params(self, context: CheckContext) -> dict[str, Any]:
        return {"m": context.m, "t": context.t, "dim": context.dim}

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        field = context.field or FieldTag.REAL
        m = int(context.m) if context.m is not None else 3
        m = max(m, 2)
        dim = int(context.dim or context.settings.campaign.bh_dim)
        t = float(context.t) if context.t is not None else float(rng.choice([1.0, 1.5]))
        if m == 3:
            blocks = [[1, 2], [3]]
        else:
            axes = [int(a) + 1 for a in rng.permutation(m)]
            cut = int(rng.integers(1, m))
            blocks = [axes[:cut], axes[cut:]]
        r_list = []
        for block in blocks:
            floor = context.constants.bh_exponent(len(block), t)
            r_list.append(float(rng.uniform(floor, 2.0)) if floor < 2.0 else floor)
        entries = self.random_entries(rng, (dim,) * m, field)
        return {
            "tensor": Tensor.from_array(entries, field).to_document(),
            "field": field.value,
            "blocks": blocks,
            "r_list": r_list,
            "t": t,
            "family_seed": int(rng.integers(0, 2 ** 32)),
        }

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        U = self.form_of(instance)
        exps = [1.0] * len(instance["blocks"])
        part = OrderedPartition.from_one_based(instance["blocks"], exps)
        report = context.forms.dps_mixed_diagnostic(
            U, part, instance["r_list"], instance["t"], seed=instance["family_seed"]
        )
        details = {
            "theta": list(report.theta),
            "exponents": list(report.exponents),
            "lhs_basis": report.lhs_basis,
            "norm": report.norm,
            "norm_exact": report.norm_exact,
        }
        return TrialOutcome(report.lhs, report.rhs, report.verdict, details)
