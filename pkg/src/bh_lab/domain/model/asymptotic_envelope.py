from __future__ import annotations

from dataclasses import dataclass

from bh_lab.domain.model.field_tag import FieldTag


@dataclass(frozen=True)
class AsymptoticEnvelope:
    """Empirical kappa for C_{m,t} <= kappa * m^exponent over 1 <= m <= m_max.

    Attributes:
        t, field, m_max: Scan inputs.
        exponent: (gamma-1)(t-2)/(2t) for C, (gamma-2+ln 2)(t-2)/(2t) for R.
        kappa_est: max over m of C_{m,t} / m^exponent.
        argmax_m: First m where the maximum is attained.
        last_decade_increase: Relative growth of the running max between
            m_max // 10 and m_max.
    """

    t: float
    field: FieldTag
    m_max: int
    exponent: float
    kappa_est: float
    argmax_m: int
    last_decade_increase: float

    @property
    def stabilized(self) -> bool:
        return self.last_decade_increase < 0.01
