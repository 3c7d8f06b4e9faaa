"""Domain package: catalogs, errors and the model dataclasses.

Import individual models from their submodules, e.g.:
    from bh_lab.domain.model.tensor import Tensor
"""

__all__ = []
