from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BhRatio:
    """Bohnenblust–Hille ratio of one form.

    Attributes:
        lhs: (sum |a_i|^rho)^(1/rho) with rho = 2tm/(2+(m-1)t).
        norm: ||U|| (exact when ``norm_exact``; otherwise a lower bound).
        ratio: lhs / norm.
        bound: C_{m,t} for the form's field.
        norm_exact: Whether ``norm`` is the exact sup norm.
        verdict: "holds", "violated" (exact norm only) or "inconclusive".
    """

    lhs: float
    norm: float
    ratio: float
    bound: float
    norm_exact: bool
    verdict: str
