"""Bohnenblust-Hille check - coefficient power sum against C_{m,t} times the sup norm."""

from typing import Any

import numpy as np

from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class BhCheck(BaseCheck):
    """(sum |a_i|^rho)^(1/rho) <= C_{m,t} ||U||, rho = 2tm/(2+(m-1)t).

    Instances:
    - m from --m (default: 2 or 3), dims from --dim (default bh_dim)
    - t from --t (default: 1.0 or 1.5)
    - Gaussian or +-1 coefficients; real by default

    Real forms use the exact sign-enumeration norm, so a ratio above the
    bound is a genuine counterexample. Complex forms use the ascent norm
    (a lower bound) and can only be inconclusive.
    """

    @property
    def name(self) -> str:
        return "bh"

    @property
    def kind(self) -> CheckKind:
        return "hard"

    def params(self, context: CheckContext) -> dict[str, Any]:
        return {"m": context.m, "t": context.t, "dim": context.dim}

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        field = context.field or FieldTag.REAL
        m = int(context.m) if context.m is not None else int(rng.integers(2, 4))
        dim = int(context.dim or context.settings.campaign.bh_dim)
        t = float(context.t) if context.t is not None else float(rng.choice([1.0, 1.5]))
        entries = self.random_entries(rng, (dim,) * m, field)
        if not np.any(entries):
            entries = np.ones((dim,) * m)
        return {
            "tensor": Tensor.from_array(entries, field).to_document(),
            "field": field.value,
            "t": t,
            "ascent_seed": int(rng.integers(0, 2 ** 32)),
        }

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        U = self.form_of(instance)
        result = context.forms.bh_ratio(U, instance["t"], seed=instance.get("ascent_seed"))
        details = {"lhs": result.lhs, "norm": result.norm, "norm_exact": result.norm_exact}
        return TrialOutcome(result.ratio, result.bound, result.verdict, details)
