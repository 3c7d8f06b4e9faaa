from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class KhinchineEstimate:
    """Empirical Khinchine ratio ||x||_2 / (E|sum eps_k x_k|^p)^(1/p).

    Attributes:
        ratio: The estimated ratio.
        bound: khinchine(p, field).
        stderr: Standard error of the ratio (0 for exact enumeration).
        samples: Number of sign/phase patterns averaged.
        exact: True for exhaustive real enumeration.
        verdict: "holds" when ratio <= bound plus the stated margin.
    """

    ratio: float
    bound: float
    stderr: float
    samples: int
    exact: bool
    verdict: str
