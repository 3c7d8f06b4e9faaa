from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from bh_lab.domain.errors import MissingKahaneConstantError, ParameterRangeError


@dataclass(frozen=True)
class SummingParams:
    """Data of a multiple-exponent summing estimate for a target space Y of cotype q.

    The constant A_{q,r}(Y) = C_q(Y) * K_{r,2} enters every sigma_n factor.
    Cotype and Kahane constants of a general Y are never computed here; the
    caller supplies them, either as a table or through ``kahane_hook``.

    Attributes:
        q: Cotype exponent, q >= 2.
        r_list: Per-block exponents (r_1, ..., r_n), each in [1, q).
        block_sizes: Cardinalities |C_1|, ..., |C_n|, all positive.
        cotype_constant: C_q(Y) >= 1.
        kahane_constants: Table r -> K_{r,2}. Lookups match keys within 1e-12.
        kahane_hook: Optional fallback r -> K_{r,2} for exponents missing from
            the table (the recursion also needs K at derived omega values).

    Examples:
        >>> params = SummingParams(2.0, (1.0, 1.0), (1, 1), 1.0, {1.0: 1.5, 4 / 3: 1.2})
        >>> params.a_constant(1.0)
        1.5
    """

    q: float
    r_list: tuple[float, ...]
    block_sizes: tuple[int, ...]
    cotype_constant: float = 1.0
    kahane_constants: Mapping[float, float] = field(default_factory=dict)
    kahane_hook: Optional[Callable[[float], float]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        r_list = tuple(float(r) for r in self.r_list)
        sizes = tuple(int(c) for c in self.block_sizes)
        q = float(self.q)
        if not math.isfinite(q) or q < 2.0:
            raise ParameterRangeError(f"Cotype exponent q must be >= 2, got {q}")
        if len(r_list) != len(sizes):
            raise ParameterRangeError("r_list and block_sizes must have the same length")
        for r in r_list:
            if not (1.0 <= r < q):
                raise ParameterRangeError(f"Each r_k must lie in [1, q), got {r} with q={q}")
        if any(c < 1 for c in sizes):
            raise ParameterRangeError("Block sizes must be positive")
        if not self.cotype_constant >= 1.0:
            raise ParameterRangeError(f"Cotype constant must be >= 1, got {self.cotype_constant}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r_list", r_list)
        object.__setattr__(self, "block_sizes", sizes)
        object.__setattr__(self, "kahane_constants", dict(self.kahane_constants))

    @property
    def n(self) -> int:
        return len(self.r_list)

    def kahane(self, r: float) -> float:
        for key, value in self.kahane_constants.items():
            if abs(float(key) - r) <= 1e-12 * max(1.0, abs(r)):
                return float(value)
        if self.kahane_hook is not None:
            return float(self.kahane_hook(r))
        raise MissingKahaneConstantError(f"No Kahane constant K_{{r,2}} supplied for r={r!r}")

    def a_constant(self, r: float) -> float:
        """A_{q,r}(Y) = C_q(Y) * K_{r,2}."""
        return self.cotype_constant * self.kahane(r)
