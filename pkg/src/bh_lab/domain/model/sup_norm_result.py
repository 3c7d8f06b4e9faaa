from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from bh_lab.domain.model.unit_pattern import UnitPattern


class SupNormMethod(str, Enum):
    EXACT_SIGNS = "exact-signs"
    ALTERNATING_ASCENT = "alternating-ascent"


@dataclass(frozen=True)
class SupNormResult:
    """Value of ||U|| on c0 with the arguments attaining it.

    ``exact`` is True only for ExactSigns; ascent values are lower bounds.
    """

    value: float
    certificate: tuple[UnitPattern, ...]
    method: SupNormMethod
    exact: bool
