from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from bh_lab.domain.errors import ExponentRangeError


@dataclass(frozen=True)
class ExponentVector:
    """Exponents (p_1, ..., p_m) defining a nested mixed norm.

    p_1 acts on the outermost index i_1, p_m on the innermost index i_m.
    Every exponent is a finite real >= 1.

    Examples:
        >>> ExponentVector.of(1, 2).reciprocal()
        (1.0, 0.5)
        >>> ExponentVector.constant(4 / 3, 2).values
        (1.3333333333333333, 1.3333333333333333)
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ExponentRangeError("Exponent vector must not be empty")
        for v in vals:
            if not math.isfinite(v) or v < 1.0:
                raise ExponentRangeError(f"Exponents must be finite and >= 1, got {v}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, *values: float) -> "ExponentVector":
        return cls(tuple(values))

    @classmethod
    def from_iterable(cls, values: Iterable[float]) -> "ExponentVector":
        return cls(tuple(values))

    @classmethod
    def constant(cls, value: float, length: int) -> "ExponentVector":
        return cls(tuple([value] * int(length)))

    @classmethod
    def from_reciprocal(cls, reciprocal: Iterable[float]) -> "ExponentVector":
        return cls(tuple(1.0 / float(x) for x in reciprocal))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def reciprocal(self) -> tuple[float, ...]:
        return tuple(1.0 / v for v in self.values)
