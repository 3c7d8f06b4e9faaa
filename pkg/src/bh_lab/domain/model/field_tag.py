from __future__ import annotations

from enum import Enum


class FieldTag(str, Enum):
    """Scalar field of a tensor, form or constant: the reals or the complexes.

    The string values double as the tags used in JSON documents and on the
    command line (``--field real|complex``).

    Examples:
        >>> FieldTag.parse("Complex")
        <FieldTag.COMPLEX: 'complex'>
        >>> FieldTag.REAL.dtype
        dtype('float64')
    """

    REAL = "real"
    COMPLEX = "complex"

    @classmethod
    def parse(cls, value: "str | FieldTag") -> "FieldTag":
        if isinstance(value, FieldTag):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"Unknown field: {value!r} (expected 'real' or 'complex')") from None

    @property
    def dtype(self):
        import numpy as np

        return np.dtype(np.float64) if self is FieldTag.REAL else np.dtype(np.complex128)
