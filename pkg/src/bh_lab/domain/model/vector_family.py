from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bh_lab.domain.errors import DimensionMismatchError


@dataclass(frozen=True, eq=False)
class VectorFamily:
    """N test vectors x_1, ..., x_N in K^d for one argument slot.

    Stored as an (N, d) matrix whose rows are the vectors. Families are the
    inputs of the weak l1 norm and of the multiple summing searches.

    Examples:
        >>> VectorFamily.basis(3).vectors.shape
        (3, 3)
    """

    vectors: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.vectors, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"A vector family is an (N, d) matrix, got ndim={arr.ndim}")
        if not np.all(np.isfinite(arr)):
            raise DimensionMismatchError("Vector family entries must be finite")
        if not np.iscomplexobj(arr):
            arr = arr.astype(np.float64)
        arr.flags.writeable = False
        object.__setattr__(self, "vectors", arr)

    @classmethod
    def basis(cls, d: int, n: int | None = None) -> "VectorFamily":
        """First ``n`` unit vectors of K^d (zero rows when n > d)."""
        n = d if n is None else n
        return cls(np.eye(n, d))

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def is_empty(self) -> bool:
        return self.vectors.size == 0
