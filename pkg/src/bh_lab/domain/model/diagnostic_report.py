from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DiagnosticReport:
    """One-sided report of the scalar mixed-exponent summing estimate.

    Attributes:
        blocks: One-based block notation, e.g. "{1,2}{3}".
        r_list: Per-block summing exponents.
        theta: Interpolation weights used for the blocks.
        exponents: Interpolated block exponents q_k (all equal to omega_n).
        lhs: Largest block mixed norm found over the searched families.
        lhs_basis: Block mixed norm for the unit-vector families.
        rhs: Product of the scalar upper bounds.
        norm: ||U|| used on the right side (exact or the coarse upper bound).
        norm_exact: Whether ``norm`` is exact.
        verdict: "holds" or "inconclusive"; never "violated".
    """

    blocks: str
    r_list: tuple[float, ...]
    theta: tuple[float, ...]
    exponents: tuple[float, ...]
    lhs: float
    lhs_basis: float
    rhs: float
    norm: float
    norm_exact: bool
    verdict: str
