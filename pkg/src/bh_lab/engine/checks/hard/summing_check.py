"""Summing check - searched multiple summing sums stay below C_{m,t} times the exact norm."""

from typing import Any

import numpy as np

from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class SummingCheck(BaseCheck):
    """pi_{(r,1)} lower bound at r = 2tm/(2+(m-1)t) vs C_{m,t} ||U|| for real forms.

    The left side is a lower bound and the right side uses the exact sign
    enumeration norm, so exceeding it is a genuine counterexample.
    """

    @property
    def name(self) -> str:
        return "summing"

    @property
    def kind(self) -> CheckKind:
        return "hard"

    def params(self, context: CheckContext) -> dict[str, Any]:
        campaign = context.settings.campaign
        return {"m": context.m, "t": context.t, "dim": context.dim,
                "family_trials": campaign.family_trials, "family_size": campaign.family_size}

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        m = int(context.m) if context.m is not None else 2
        dim = int(context.dim or context.settings.campaign.bh_dim)
        t = float(context.t) if context.t is not None else float(rng.choice([1.0, 1.5]))
        entries = self.random_entries(rng, (dim,) * m, FieldTag.REAL)
        return {
            "tensor": Tensor.from_array(entries, FieldTag.REAL).to_document(),
            "field": FieldTag.REAL.value,
            "t": t,
            "family_seed": int(rng.integers(0, 2 ** 32)),
        }

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        U = self.form_of(instance)
        t = instance["t"]
        campaign = context.settings.campaign
        r = context.constants.bh_exponent(U.order, t)
        lower = context.forms.summing_lower_bound(
            U, r, campaign.family_trials, campaign.family_size, instance["family_seed"]
        )
        norm = context.forms.sup_norm(U, "exact-signs").value
        bound = context.constants.c_constant_closed(U.order, t, U.field) * norm
        tolerance = context.settings.tolerance
        ok = lower <= bound * (1.0 + tolerance.bh_ratio_rel) + tolerance.summing_abs
        return TrialOutcome(lower, bound, "holds" if ok else "violated", {"r": r, "norm": norm})
