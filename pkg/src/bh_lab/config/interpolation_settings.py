from dataclasses import dataclass


@dataclass(frozen=True)
class InterpolationSettings:
    # Above this many nodes the subset enumeration is replaced by a linear program
    enumeration_max_nodes: int = 12
    # Rank tolerance when testing affine independence of a node subset
    rank_tol: float = 1e-12
