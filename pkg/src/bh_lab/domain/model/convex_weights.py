from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from bh_lab.domain.errors import InconsistentWeightsError


@dataclass(frozen=True)
class ConvexWeights:
    """Barycentric coordinates (theta_1, ..., theta_N) on the interpolation nodes.

    Attributes:
        theta: Non-negative weights in [0, 1] summing to 1 (within ``sum_tol``).
        subset: Node indices the solver used (empty when not produced by a solver).
        residual: Max reciprocal residual |sum theta_k / q_i(k) - 1 / q_i| achieved.

    Examples:
        >>> ConvexWeights((0.5, 0.5)).theta
        (0.5, 0.5)
    """

    theta: tuple[float, ...]
    subset: tuple[int, ...] = ()
    residual: float = 0.0
    sum_tol: float = 1e-12

    def __post_init__(self) -> None:
        theta = tuple(float(x) for x in self.theta)
        if not theta:
            raise InconsistentWeightsError("Convex weights must not be empty")
        for x in theta:
            if not (-self.sum_tol <= x <= 1.0 + self.sum_tol):
                raise InconsistentWeightsError(f"Weights must lie in [0, 1], got {x}")
        total = sum(theta)
        if abs(total - 1.0) > self.sum_tol:
            raise InconsistentWeightsError(f"Weights must sum to 1, got {total!r}")
        theta = tuple(min(1.0, max(0.0, x)) for x in theta)
        object.__setattr__(self, "theta", theta)

    def __len__(self) -> int:
        return len(self.theta)

    def __getitem__(self, index: int) -> float:
        return self.theta[index]

    @classmethod
    def uniform(cls, n: int) -> "ConvexWeights":
        return cls(tuple([1.0 / n] * n), sum_tol=1e-12 * max(1, n))

    @classmethod
    def normalized(cls, values: Sequence[float], **kwargs) -> "ConvexWeights":
        total = float(sum(values))
        return cls(tuple(float(v) / total for v in values), **kwargs)


@dataclass(frozen=True)
class Infeasible:
    """Returned when a target is not in the convex hull of the nodes within tolerance.

    Attributes:
        residual: Smallest reciprocal residual found (inf when nothing was tried).
        reason: Short human-readable explanation.
    """

    residual: float
    reason: str = "target reciprocal is outside the convex hull of the nodes"

    def __bool__(self) -> bool:
        return False
