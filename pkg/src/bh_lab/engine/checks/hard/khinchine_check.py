"""Khinchine check - exact or quadrature Khinchine ratios never exceed the closed-form constant."""

from typing import Any

import numpy as np

from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext


class KhinchineCheck(BaseCheck):
    """||x||_2 / (E|sum eps_k x_k|^p)^(1/p) <= A_p for the field's random signs or phases.

    Instances:
    - Real: n in 1..10 (exhaustive 2^(n-1) sign patterns), exact and hard
    - Complex: n in 1..3 on the roots-of-unity grid; one-sided
    - One trial in four uses the flat vector (1, ..., 1)
    - p uniform in [1, 2]
    """

    @property
    def name(self) -> str:
        return "khinchine"

    @property
    def kind(self) -> CheckKind:
        return "hard"

    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        field = self.pick_field(rng, context)
        n = int(rng.integers(1, 11 if field is FieldTag.REAL else 4))
        if rng.random() < 0.25:
            x = np.ones(n)
        else:
            x = rng.standard_normal(n)
            if field is FieldTag.COMPLEX:
                x = x + 1j * rng.standard_normal(n)
        if field is FieldTag.COMPLEX:
            coords = [[float(z.real), float(z.imag)] for z in np.asarray(x, dtype=np.complex128)]
        else:
            coords = [float(v) for v in x]
        return {"field": field.value, "x": coords, "p": float(rng.uniform(1.0, 2.0))}

    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        field = FieldTag.parse(instance["field"])
        if field is FieldTag.COMPLEX:
            x = np.array([complex(re, im) for re, im in instance["x"]])
        else:
            x = np.array(instance["x"], dtype=np.float64)
        estimate = context.forms.khinchine_exact_small(x, instance["p"], field)
        return TrialOutcome(estimate.ratio, estimate.bound, estimate.verdict,
                            {"samples": estimate.samples, "exact": estimate.exact})
