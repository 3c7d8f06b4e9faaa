"""Interpolation check - a mixed norm is bounded by the weighted product of its node norms."""

from typing import Any

import numpy as np

from bh_lab.domain.model.convex_weights import ConvexWeights
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class InterpolationCheck(BaseCheck):
    """||a||_q <= prod_k ||a||_{q(k)}^theta_k when 1/q is the theta-combination of the 1/q(k).

    Instances:
    - Tensors of order 1..max_order with dims up to max_dim, either field
    - 2-4 random nodes with reciprocals in [1/4, 1]; the target is a random
      convex combination of them
    - One trial in four uses the Blei decomposition (k = m - 1, s = 1, q = 2)

    The weights are recovered by the solver, not taken from the sampler, so
    the campaign also exercises ``find_convex_weights``. Two-stage splitting
    of the right side must agree with the direct product.
    """

    @property
    def name(self) -> str:
        return "interpolation"

    @property
    def kind(self) -> CheckKind:
        return "hard"

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        campaign = context.settings.campaign
        field = self.pick_field(rng, context)
        m = int(rng.integers(1, campaign.max_order + 1))
        shape = self.random_shape(rng, m, campaign.max_dim)
        tensor = Tensor.from_array(self.random_entries(rng, shape, field), field)
        if m >= 2 and rng.random() < 0.25:
            target, nodes, _ = context.interpolation.blei_nodes(m, m - 1, 1.0, 2.0)
            target_values = list(target.values)
            node_values = [list(n.q.values) for n in nodes]
        else:
            count = int(rng.integers(2, 5))
            recips = rng.uniform(0.25, 1.0, size=(count, m))
            theta = rng.dirichlet(np.ones(count))
            node_values = [[float(1.0 / x) for x in row] for row in recips]
            target_values = [float(1.0 / x) for x in theta @ recips]
        return {"tensor": tensor.to_document(), "target": target_values, "nodes": node_values}

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        tensor = self.tensor_of(instance)
        target, nodes = instance["target"], instance["nodes"]
        weights = context.interpolation.find_convex_weights(target, nodes)
        if not isinstance(weights, ConvexWeights):
            return TrialOutcome(0.0, 0.0, "inconclusive", {"reason": weights.reason, "residual": weights.residual})
        lhs, rhs = context.interpolation.interpolation_bound(tensor, target, nodes, weights)
        details = {"theta": list(weights.theta), "subset": list(weights.subset)}
        verdict = self.verdict(lhs, rhs, context.tol)
        if weights.theta[0] < 1.0 and rhs > 0.0:
            two_stage = context.interpolation.two_stage_rhs(tensor, nodes, weights)
            details["two_stage_rhs"] = two_stage
            if abs(two_stage - rhs) > context.settings.tolerance.identity_rel * rhs:
                verdict = "violated"
        return TrialOutcome(lhs, rhs, verdict, details)
