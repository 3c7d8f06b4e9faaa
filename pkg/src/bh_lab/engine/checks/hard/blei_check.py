"""Blei check - flat l_rho norm against the product of (s, q) block mixed norms over k-subsets."""

from typing import Any

import numpy as np

from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class BleiCheck(BaseCheck):
    """Blei-type inequality with rho = msq / (kq + (m-k)s).

    Instances: order 1..max_order, dims up to max_dim, 1 <= k <= m,
    q in [1, 4] and s in [1, q].
    """

    @property
    def name(self) -> str:
        return "blei"

    @property
    def kind(self) -> CheckKind:
        return "hard"

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        campaign = context.settings.campaign
        field = self.pick_field(rng, context)
        m = int(context.m) if context.m is not None else int(rng.integers(1, campaign.max_order + 1))
        shape = self.random_shape(rng, m, campaign.max_dim)
        q = float(rng.uniform(1.0, 4.0))
        return {
            "tensor": Tensor.from_array(self.random_entries(rng, shape, field), field).to_document(),
            "k": int(rng.integers(1, m + 1)),
            "s": float(rng.uniform(1.0, q)),
            "q": q,
        }

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        tensor = self.tensor_of(instance)
        lhs, rhs = context.norms.blei_bound(tensor, instance["k"], instance["s"], instance["q"])
        rho = context.norms.blei_rho(tensor.order, instance["k"], instance["s"], instance["q"])
        return TrialOutcome(lhs, rhs, self.verdict(lhs, rhs, context.tol), {"rho": rho})
