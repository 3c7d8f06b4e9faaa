from dataclasses import dataclass


@dataclass(frozen=True)
class ConstantsSettings:
    # Bracket for the p0 bisection; the right end stays below the second root at p=2
    p0_bracket: tuple[float, float] = (1.0, 1.9)
    # Absolute x-tolerance of the p0 bisection
    p0_xtol: float = 1e-15
    # Euler–Mascheroni constant (20 significant digits)
    euler_gamma: float = 0.57721566490153286061
    # Source of the C_closed column: "product" (A-product form) or "displayed"
    closed_form_source: str = "product"
    # Relative disagreement between product and displayed forms that triggers the fallback
    displayed_agreement_rel: float = 1e-10
    # Minimum m_max for the asymptotic envelope scan
    envelope_min_m: int = 10
