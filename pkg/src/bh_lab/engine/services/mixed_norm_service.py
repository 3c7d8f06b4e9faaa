from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import Any, Sequence

import numpy as np

from bh_lab.domain.errors import DimensionMismatchError, ExponentRangeError, ParameterRangeError
from bh_lab.domain.model.exponent_vector import ExponentVector
from bh_lab.domain.model.ordered_partition import OrderedPartition
from bh_lab.domain.model.tensor import Tensor

logger = logging.getLogger(__name__)


def _moduli(t: Any) -> np.ndarray:
    if isinstance(t, Tensor):
        return t.moduli()
    arr = np.abs(np.asarray(t))
    if arr.ndim == 0:
        arr = arr.reshape(1)
    return arr.astype(np.float64, copy=False)


def nested_power_norm(moduli: np.ndarray, exponents: Sequence[float]) -> float:
    """Nested power-sum norm of a non-negative array, innermost axis last.

    No validation: exponents in (0, 1) are accepted (quasi-norms), which the
    Minkowski exchange needs. The array is scaled by its maximum first so
    large or tiny entries do not overflow the powers.
    """
    if moduli.size == 0:
        return 0.0
    scale = float(moduli.max())
    if scale == 0.0:
        return 0.0
    x = moduli / scale
    acc = (x ** exponents[-1]).sum(axis=-1)
    for k in range(len(exponents) - 2, -1, -1):
        acc = (acc ** (exponents[k] / exponents[k + 1])).sum(axis=-1)
    return scale * float(acc) ** (1.0 / exponents[0])


class MixedNormService:
    """Dense mixed-norm arithmetic on coefficient tensors.

    All methods are pure functions of their arguments. Tensors may be passed
    as :class:`Tensor` or as any numpy array-like; only the moduli |a_i|
    enter the computations.
    """

    # ---------- nested and flat norms ----------
    def mixed_norm(self, t: Any, p: "ExponentVector | Sequence[float]") -> float:
        """(sum_{i1} (... (sum_{im} |a_i|^{p_m})^{p_{m-1}/p_m} ...)^{p_1/p_2})^{1/p_1}.

        Raises:
            DimensionMismatchError: when len(p) differs from the tensor order.
            ExponentRangeError: when an exponent is below 1.
        """
        p = p if isinstance(p, ExponentVector) else ExponentVector.from_iterable(p)
        moduli = _moduli(t)
        if len(p) != moduli.ndim:
            raise DimensionMismatchError(
                f"Exponent vector of length {len(p)} for a tensor of order {moduli.ndim}"
            )
        return nested_power_norm(moduli, p.values)

    def flat_norm(self, t: Any, q: float) -> float:
        """Flat l_q norm of the entry list."""
        if not math.isfinite(q) or q < 1.0:
            raise ExponentRangeError(f"Exponent must be finite and >= 1, got {q}")
        return nested_power_norm(_moduli(t).reshape(-1), (float(q),))

    def block_mixed_norm(self, t: Any, part: OrderedPartition) -> float:
        """Nested norm where each block contributes one flat aggregation, outer blocks first."""
        moduli = _moduli(t)
        part.validate_for(moduli.ndim)
        arranged = np.transpose(moduli, part.axes)
        shape = tuple(int(np.prod([moduli.shape[a] for a in block])) for block in part.blocks)
        return nested_power_norm(arranged.reshape(shape), part.per_block_exponents)

    # ---------- Minkowski exchange ----------
    def minkowski_gap(self, t: Any, p: float, q: float) -> tuple[float, float]:
        """Both sides of the exchange of an inner l_p and an outer l_q sum, 0 < p < q.

        lhs = (sum_i (sum_j |a_ij|^p)^{q/p})^{1/q}
        rhs = (sum_j (sum_i |a_ij|^q)^{p/q})^{1/p}
        """
        moduli = _moduli(t)
        if moduli.ndim != 2:
            raise DimensionMismatchError(f"Minkowski exchange needs an order-2 tensor, got order {moduli.ndim}")
        p, q = float(p), float(q)
        if not (0.0 < p < q) or not math.isfinite(q):
            raise ExponentRangeError(f"Minkowski exchange needs 0 < p < q, got p={p}, q={q}")
        lhs = nested_power_norm(moduli, (q, p))
        rhs = nested_power_norm(moduli.T, (p, q))
        return lhs, rhs

    # ---------- Blei inequality ----------
    @staticmethod
    def blei_rho(m: int, k: int, s: float, q: float) -> float:
        """rho = m*s*q / (k*q + (m-k)*s); rho = q when s = q and rho = s when k = m."""
        m, k = int(m), int(k)
        s, q = float(s), float(q)
        if m < 1 or not (1 <= k <= m):
            raise ParameterRangeError(f"Blei exponent needs 1 <= k <= m, got m={m}, k={k}")
        if not (1.0 <= s <= q) or not math.isfinite(q):
            raise ExponentRangeError(f"Blei exponent needs 1 <= s <= q, got s={s}, q={q}")
        return m * s * q / (k * q + (m - k) * s)

    def blei_bound(self, t: Any, k: int, s: float, q: float) -> tuple[float, float]:
        """Flat l_rho norm vs the product over k-subsets S of the (s on S, q on the rest) block norms.

        Each factor enters with power 1/binom(m, k); the product is taken in log space.
        """
        moduli = _moduli(t)
        m = moduli.ndim
        rho = self.blei_rho(m, k, s, q)
        lhs = nested_power_norm(moduli.reshape(-1), (rho,))
        if k == m:
            return lhs, nested_power_norm(moduli.reshape(-1), (float(s),))
        subsets = list(combinations(range(m), int(k)))
        weight = 1.0 / len(subsets)
        log_rhs = 0.0
        for subset in subsets:
            rest = tuple(a for a in range(m) if a not in subset)
            factor = self.block_mixed_norm(moduli, OrderedPartition((subset, rest), (float(s), float(q))))
            if factor == 0.0:
                return lhs, 0.0
            log_rhs += weight * math.log(factor)
        rhs = math.exp(log_rhs)
        logger.debug("blei m=%d k=%d s=%g q=%g rho=%g lhs=%r rhs=%r", m, k, s, q, rho, lhs, rhs)
        return lhs, rhs
