from dataclasses import dataclass


@dataclass(frozen=True)
class KhinchineSettings:
    # Monte Carlo samples drawn per vectorized batch
    mc_batch: int = 2 ** 15
    # Smallest accepted Monte Carlo sample count
    mc_min_samples: int = 10_000
    # Monte Carlo contract margin in standard errors
    mc_sigmas: float = 3.0
    # Exact real enumeration handles at most this many coordinates (2^n patterns)
    exact_real_max_n: int = 20
    # Complex quadrature handles at most this many coordinates
    exact_complex_max_n: int = 6
    # Roots of unity per coordinate in the complex quadrature
    quadrature_roots: int = 64
