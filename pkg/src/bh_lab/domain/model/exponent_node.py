from __future__ import annotations

from dataclasses import dataclass, field

from bh_lab.domain.model.exponent_vector import ExponentVector


@dataclass(frozen=True)
class ExponentNode:
    """A node exponent vector q(k) of an interpolation, with cached reciprocals.

    Attributes:
        q: The node exponents (q_1(k), ..., q_m(k)).
        reciprocal: (1/q_1(k), ..., 1/q_m(k)), each in (0, 1]. Computed once.

    Examples:
        >>> ExponentNode.of(1, 2).reciprocal
        (1.0, 0.5)
    """

    q: ExponentVector
    reciprocal: tuple[float, ...] = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.q, ExponentVector):
            object.__setattr__(self, "q", ExponentVector.from_iterable(self.q))
        object.__setattr__(self, "reciprocal", self.q.reciprocal())

    @classmethod
    def of(cls, *values: float) -> "ExponentNode":
        return cls(ExponentVector(tuple(values)))

    def __len__(self) -> int:
        return len(self.q)
