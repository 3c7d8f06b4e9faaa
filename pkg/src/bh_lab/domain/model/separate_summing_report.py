from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SeparateSummingReport:
    """One-sided report of the N-separately summing estimate at N = m.

    Attributes:
        n: Size of the coordinate subsets S the form is summing in.
        r: Summing exponent on each n-subset.
        exponent: Target exponent r_m = 2rm / (2n + (m-n)r).
        subsets: One-based n-subsets in lexicographic order.
        subset_norms: Upper bound for ||U^S|| per subset, same order.
        subset_exact: Whether each bound came from an exact sup norm.
        constant: A_r^(m-n), the Khinchine factor of the estimate.
        lhs: Largest (r_m, 1)-summing sum found over the searched families.
        rhs: constant * prod_S subset_norm^(1 / binom(m, n)).
        verdict: "holds" or "inconclusive"; never "violated".
    """

    n: int
    r: float
    exponent: float
    subsets: tuple[str, ...]
    subset_norms: tuple[float, ...]
    subset_exact: tuple[bool, ...]
    constant: float
    lhs: float
    rhs: float
    verdict: str
