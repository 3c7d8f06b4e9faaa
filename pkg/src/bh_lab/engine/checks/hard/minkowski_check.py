"""Minkowski exchange check - an inner l_p sum inside an outer l_q sum can be swapped for 0 < p < q."""

from typing import Any

import numpy as np

from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class MinkowskiCheck(BaseCheck):
    """(sum_i (sum_j |a_ij|^p)^(q/p))^(1/q) <= (sum_j (sum_i |a_ij|^q)^(p/q))^(1/p).

    Instances:
    - Random matrices up to max_dim x max_dim, Gaussian or +-1 entries
    - One trial in five is a rank-one matrix (equality case)
    - 0 < p < q, with p below 1 about a third of the time
    """

    @property
    def name(self) -> str:
        return "minkowski"

    @property
    def kind(self) -> CheckKind:
        return "hard"

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        field = self.pick_field(rng, context)
        shape = self.random_shape(rng, 2, context.settings.campaign.max_dim)
        if rng.random() < 0.2:
            u = self.random_entries(rng, (shape[0],), field)
            v = self.random_entries(rng, (shape[1],), field)
            entries = np.outer(u, v)
        else:
            entries = self.random_entries(rng, shape, field)
        p = float(rng.uniform(0.2, 3.0))
        q = p + float(rng.uniform(0.05, 3.0))
        return {"tensor": Tensor.from_array(entries, field).to_document(), "p": p, "q": q}

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        lhs, rhs = context.norms.minkowski_gap(self.tensor_of(instance), instance["p"], instance["q"])
        return TrialOutcome(lhs, rhs, self.verdict(lhs, rhs, context.tol))
