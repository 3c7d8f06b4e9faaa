from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ExponentComparison:
    """Old (block-splitting) vs new (N-separate) summing exponent for one (n, N, q, r).

    Attributes:
        n, N, q, r: Inputs; N = k*n + l with 0 <= l < n.
        k, l: Quotient and remainder of N by n.
        old: q(k+1)r/(q+kr) when l != 0, qkr/(q+(k-1)r) when l == 0.
        new: qrN/(nq+(N-n)r).
        verdict: "strict" when old > new, "equal" when they agree within 1e-12.
    """

    n: int
    N: int
    q: float
    r: float
    k: int
    l: int
    old: float
    new: float
    verdict: str
