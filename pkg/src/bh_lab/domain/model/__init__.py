"""Domain models package.

Import individual models from their submodules, e.g.:
    from bh_lab.domain.model.exponent_vector import ExponentVector
"""

__all__ = []
