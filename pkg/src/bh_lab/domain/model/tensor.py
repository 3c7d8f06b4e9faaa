from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from bh_lab.domain.errors import DimensionMismatchError, MalformedTensorFileError
from bh_lab.domain.model.field_tag import FieldTag


@dataclass(frozen=True, eq=False)
class Tensor:
    """Dense m-dimensional array of real or complex scalars.

    A Tensor is the coefficient array (a_i) indexed by multi-indices
    i = (i_1, ..., i_m). Every norm, inequality and multilinear form in the
    lab is evaluated on one of these.

    Attributes:
        field: Scalar field of the entries. A REAL tensor stores float64
            values, a COMPLEX tensor complex128 values.
        shape: Positive dimensions (n_1, ..., n_m), m >= 1.
        entries: Read-only numpy array with exactly ``shape``. May be passed
            flat in row-major multi-index order; it is reshaped on creation.

    Examples:
        >>> t = Tensor(FieldTag.REAL, (2, 2), [1.0, 0.0, 0.0, 1.0])
        >>> t.order, t.size
        (2, 4)
        >>> Tensor.from_array(np.eye(3)).shape
        (3, 3)

    Notes:
        - Entry count must equal the product of the dimensions.
        - NaN and infinite entries are rejected.
        - The stored array is a private copy flagged read-only, so a Tensor
          can be shared between threads.
    """

    field: FieldTag
    shape: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        field = FieldTag.parse(self.field)
        shape = tuple(int(n) for n in self.shape)
        if len(shape) < 1:
            raise DimensionMismatchError("Tensor order must be at least 1")
        if any(n < 1 for n in shape):
            raise DimensionMismatchError(f"Every dimension must be positive, got {shape}")
        raw = np.asarray(self.entries)
        if field is FieldTag.REAL and np.iscomplexobj(raw):
            if np.any(np.imag(raw) != 0):
                raise DimensionMismatchError("Real tensor received complex entries")
            raw = np.real(raw)
        data = np.array(raw, dtype=field.dtype, copy=True)
        if data.size != int(np.prod(shape)):
            raise DimensionMismatchError(
                f"Entry count {data.size} does not match shape {shape} (expected {int(np.prod(shape))})"
            )
        data = data.reshape(shape)
        if not np.all(np.isfinite(data)):
            raise DimensionMismatchError("Tensor entries must be finite")
        data.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", data)

    @classmethod
    def from_array(cls, array: Any, field: "FieldTag | str | None" = None) -> "Tensor":
        """Build a tensor from any array-like; the field defaults to the array's kind."""
        arr = np.asarray(array)
        if arr.ndim == 0:
            arr = arr.reshape(1)
        if field is None:
            field = FieldTag.COMPLEX if np.iscomplexobj(arr) else FieldTag.REAL
        return cls(FieldTag.parse(field), tuple(arr.shape), arr)

    @property
    def order(self) -> int:
        return len(self.shape)

    @property
    def size(self) -> int:
        return int(self.entries.size)

    def moduli(self) -> np.ndarray:
        """Euclidean moduli |a_i| as a float64 array of the same shape."""
        return np.abs(self.entries)

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def scaled(self, c: complex) -> "Tensor":
        field = self.field
        if isinstance(c, complex) and c.imag != 0:
            field = FieldTag.COMPLEX
        return Tensor.from_array(self.entries * c, field)

    def transposed(self, axes: Sequence[int]) -> "Tensor":
        return Tensor.from_array(np.transpose(self.entries, tuple(axes)), self.field)

    # ---------- JSON document format ----------
    def to_document(self) -> dict[str, Any]:
        """Serialize as {"field", "shape", "entries"}; complex entries become [re, im]."""
        flat = self.entries.reshape(-1)
        if self.field is FieldTag.COMPLEX:
            entries: list[Any] = [[float(z.real), float(z.imag)] for z in flat]
        else:
            entries = [float(x) for x in flat]
        return {"field": self.field.value, "shape": list(self.shape), "entries": entries}

    @classmethod
    def from_document(cls, doc: Any) -> "Tensor":
        if not isinstance(doc, dict):
            raise MalformedTensorFileError("Tensor document must be a JSON object")
        missing = [k for k in ("field", "shape", "entries") if k not in doc]
        if missing:
            raise MalformedTensorFileError(f"Tensor document is missing keys: {', '.join(missing)}")
        try:
            field = FieldTag.parse(doc["field"])
            shape = tuple(int(n) for n in doc["shape"])
            raw = doc["entries"]
            if field is FieldTag.COMPLEX:
                values = [complex(float(e[0]), float(e[1])) for e in raw]
            else:
                values = [float(e) for e in raw]
        except (TypeError, ValueError, IndexError) as exc:
            raise MalformedTensorFileError(f"Malformed tensor document: {exc}") from exc
        try:
            return cls(field, shape, np.asarray(values, dtype=field.dtype))
        except DimensionMismatchError as exc:
            raise MalformedTensorFileError(str(exc)) from exc
