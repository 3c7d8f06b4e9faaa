"""Base class for all verification checks."""

from abc import ABC, abstractmethod
from typing import Any, Literal

import numpy as np

from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.domain.model.multilinear_form import MultilinearForm
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.context import CheckContext

# Hard checks may report "violated"; one-sided checks only "holds" or "inconclusive"
CheckKind = Literal["hard", "one-sided"]


class BaseCheck(ABC):
    """Abstract base class for verification checks.

    Each check encapsulates:
    - Its name (the ``verify`` subcommand) and kind (hard or one-sided)
    - Sampling of a random instance from a per-trial generator
    - Evaluation of both sides of its inequality on an instance

    Instances are plain JSON-ready dicts, so any instance (in particular a
    campaign witness) can be written to disk and evaluated again later.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name, e.g. "minkowski"."""

    @property
    @abstractmethod
    def kind(self) -> CheckKind:
        """'hard' or 'one-sided'."""

    @abstractmethod
    def sample(self, rng: np.random.Generator, context: CheckContext) -> dict[str, Any]:
        """Draw one instance. Must use ``rng`` as the only source of randomness."""

    @abstractmethod
    def evaluate(self, instance: dict[str, Any], context: CheckContext) -> TrialOutcome:
        """Evaluate an instance; deterministic given the instance."""

    def params(self, context: CheckContext) -> dict[str, Any]:
        """Campaign parameters echoed in the report."""
        return {}

    # ---------- sampling helpers shared by the checks ----------
    @staticmethod
    def pick_field(rng: np.random.Generator, context: CheckContext) -> FieldTag:
        if context.field is not None:
            return context.field
        return FieldTag.COMPLEX if rng.random() < 0.5 else FieldTag.REAL

    @staticmethod
    def random_entries(rng: np.random.Generator, shape: tuple[int, ...], field: FieldTag) -> np.ndarray:
        """Gaussian entries, or a +-1 ensemble one time in four."""
        if rng.random() < 0.25:
            entries = rng.choice([-1.0, 1.0], size=shape)
            if field is FieldTag.COMPLEX:
                entries = entries * np.exp(2j * np.pi * rng.integers(0, 4, size=shape) / 4)
            return entries
        entries = rng.standard_normal(shape)
        if field is FieldTag.COMPLEX:
            entries = entries + 1j * rng.standard_normal(shape)
        return entries

    @staticmethod
    def random_shape(rng: np.random.Generator, order: int, max_dim: int) -> tuple[int, ...]:
        return tuple(int(n) for n in rng.integers(1, max_dim + 1, size=order))

    @staticmethod
    def tensor_of(instance: dict[str, Any], key: str = "tensor") -> Tensor:
        return Tensor.from_document(instance[key])

    @staticmethod
    def form_of(instance: dict[str, Any]) -> MultilinearForm:
        return MultilinearForm(Tensor.from_document(instance["tensor"]), FieldTag.parse(instance["field"]))

    @staticmethod
    def verdict(lhs: float, rhs: float, rel: float, hard: bool = True) -> str:
        if lhs <= rhs * (1.0 + rel):
            return "holds"
        return "violated" if hard else "inconclusive"
