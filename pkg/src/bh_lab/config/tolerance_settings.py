from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceSettings:
    # Relative slack allowed on lhs <= rhs assertions (Minkowski, Blei, interpolation)
    inequality_rel: float = 1e-10
    # Max reciprocal residual accepted by the convex weight solver
    weights: float = 1e-10
    # Max deviation of sum(theta) from 1
    simplex_sum: float = 1e-12
    # Relative slack for ratio <= C_{m,t} checks
    bh_ratio_rel: float = 1e-9
    # Absolute slack for exact Khinchine enumeration vs the closed constant
    khinchine_exact_abs: float = 1e-9
    # Absolute slack for summing lower bounds vs C * ||U||
    summing_abs: float = 1e-9
    # Relative agreement expected between recursive and closed omega/f evaluations
    identity_rel: float = 1e-12
