from dataclasses import dataclass


@dataclass(frozen=True)
class NormSettings:
    # Max number of sign patterns enumerated by the exact real sup norm
    max_sign_patterns: int = 2 ** 24
    # Sign patterns evaluated per vectorized chunk
    sign_chunk: int = 2 ** 14
    # Alternating ascent: number of restarts (first one starts from all-ones)
    ascent_restarts: int = 20
    # Alternating ascent: max full cycles over the argument slots
    ascent_cycles: int = 100
    # Alternating ascent: stop when a full cycle improves by less than this
    ascent_improvement: float = 1e-12
    # Default seed for ascent restarts when none is given
    ascent_seed: int = 0
