from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bh_lab.domain.errors import DimensionMismatchError
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.tensor import Tensor


@dataclass(frozen=True)
class MultilinearForm:
    """An m-linear form U on finite sections of c0, given by its coefficients.

    U(x^1, ..., x^m) = sum_i a_i * x^1_{i_1} * ... * x^m_{i_m}, so that
    U(e_{i_1}, ..., e_{i_m}) = a_i exactly.

    Attributes:
        coefficients: Coefficient tensor of order m; slot k has dimension n_k.
        field: Field the form acts on. Real coefficients may be read over the
            complex field; complex coefficients require the complex field.

    Examples:
        >>> U = MultilinearForm.from_array(np.eye(2))
        >>> U.order, U.dims, U.field
        (2, (2, 2), <FieldTag.REAL: 'real'>)
    """

    coefficients: Tensor
    field: FieldTag = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        field = self.coefficients.field if self.field is None else FieldTag.parse(self.field)
        if field is FieldTag.REAL and self.coefficients.field is FieldTag.COMPLEX:
            raise DimensionMismatchError("Complex coefficients cannot define a real form")
        object.__setattr__(self, "field", field)

    @classmethod
    def from_array(cls, array, field: "FieldTag | str | None" = None) -> "MultilinearForm":
        tensor = Tensor.from_array(array)
        return cls(tensor, None if field is None else FieldTag.parse(field))

    @property
    def order(self) -> int:
        return self.coefficients.order

    @property
    def dims(self) -> tuple[int, ...]:
        return self.coefficients.shape

    @property
    def array(self) -> np.ndarray:
        return self.coefficients.entries

    def scaled(self, c: complex) -> "MultilinearForm":
        tensor = self.coefficients.scaled(c)
        field = FieldTag.COMPLEX if tensor.field is FieldTag.COMPLEX else self.field
        return MultilinearForm(tensor, field)
