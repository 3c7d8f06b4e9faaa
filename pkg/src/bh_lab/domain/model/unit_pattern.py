from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bh_lab.domain.errors import DimensionMismatchError


@dataclass(frozen=True, eq=False)
class UnitPattern:
    """A vector of unit-modulus scalars: signs (real) or phases (complex).

    Sign patterns are the extreme points of the real unit ball of l_inf^n and
    phase patterns those of the complex one; maximizing arguments of a form
    on c0 are reported as one UnitPattern per slot.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, copy=True).reshape(-1)
        if arr.size and not np.allclose(np.abs(arr), 1.0, atol=1e-12):
            raise DimensionMismatchError("Unit patterns need entries of modulus 1")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def signs_of(cls, g: np.ndarray) -> "UnitPattern":
        """Signs of ``g`` with sign(0) := +1."""
        return cls(np.where(np.real(g) >= 0, 1.0, -1.0))

    @classmethod
    def conjugate_phases_of(cls, g: np.ndarray) -> "UnitPattern":
        """conj(g_j)/|g_j| per coordinate (1 where g_j = 0)."""
        g = np.asarray(g, dtype=np.complex128)
        mod = np.abs(g)
        safe = np.where(mod > 0, mod, 1.0)
        return cls(np.where(mod > 0, np.conj(g) / safe, 1.0 + 0j))

    def to_list(self) -> list:
        if np.iscomplexobj(self.values):
            return [[float(z.real), float(z.imag)] for z in self.values]
        return [float(x) for x in self.values]
