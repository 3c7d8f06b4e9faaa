from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

from bh_lab.domain.model.field_tag import FieldTag


@dataclass(frozen=True)
class ConstantsRow:
    """One (m, t, field) row of a constants table.

    Attributes:
        m: Degree of the forms.
        t: Variant parameter in [1, 2).
        field: Scalar field.
        exponent: 2tm / (2 + (m - 1)t), in [t, 2).
        c_recursive: C_{m,t} from the halving recursion.
        c_closed: C_{m,t} from the product of Khinchine constants.
        c_displayed: C_{m,t} from the verbatim displayed closed form, if evaluated.
    """

    m: int
    t: float
    field: FieldTag
    exponent: float
    c_recursive: float
    c_closed: float
    c_displayed: Optional[float] = None

    @property
    def improvement(self) -> float:
        return self.c_closed / self.c_recursive


@dataclass
class ConstantsReport:
    """Tabulated constants with provenance metadata (tolerances, build id)."""

    rows: list[ConstantsRow] = dc_field(default_factory=list)
    metadata: dict[str, Any] = dc_field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, m: int, t: float, field: FieldTag) -> Optional[ConstantsRow]:
        for row in self.rows:
            if row.m == m and row.field is field and abs(row.t - t) < 1e-15:
                return row
        return None
