from __future__ import annotations

import logging
import math
from itertools import chain, combinations
from typing import Any, Optional, Sequence, Union

import numpy as np
from scipy import optimize

from bh_lab.config import SETTINGS
from bh_lab.domain.errors import DimensionMismatchError, InconsistentWeightsError
from bh_lab.domain.model.convex_weights import ConvexWeights, Infeasible
from bh_lab.domain.model.exponent_node import ExponentNode
from bh_lab.domain.model.exponent_vector import ExponentVector
from bh_lab.engine.services.mixed_norm_service import MixedNormService

logger = logging.getLogger(__name__)

NodeLike = Union[ExponentNode, ExponentVector, Sequence[float]]


def _as_node(node: NodeLike) -> ExponentNode:
    if isinstance(node, ExponentNode):
        return node
    return ExponentNode(node if isinstance(node, ExponentVector) else ExponentVector.from_iterable(node))


def _as_vector(v: Any) -> ExponentVector:
    return v if isinstance(v, ExponentVector) else ExponentVector.from_iterable(v)


class InterpolationService:
    """Convex-hull decomposition of reciprocal exponent vectors and the product bound it yields."""

    def __init__(self, norms: Optional[MixedNormService] = None, settings=None):
        self.norms = norms or MixedNormService()
        self.settings = settings or SETTINGS

    # ---------- weights ----------
    def find_convex_weights(
        self,
        target: Any,
        nodes: Sequence[NodeLike],
        tol: Optional[float] = None,
    ) -> "ConvexWeights | Infeasible":
        """Find theta on the simplex with sum_k theta_k / q(k) = 1 / target, coordinatewise.

        Small node sets are searched exactly: affinely independent subsets are
        visited in lexicographic order of their sorted index tuples, so (0,)
        comes before (0, 1) and (0, 1) before (1,), and the first feasible
        solution is returned. Larger sets are solved as a linear program that
        minimizes the max reciprocal residual over the simplex.

        Examples:
            >>> w = InterpolationService().find_convex_weights((4 / 3, 4 / 3), [(1, 2), (2, 1)])
            >>> [round(x, 12) for x in w.theta]
            [0.5, 0.5]
        """
        tol = self.settings.tolerance.weights if tol is None else float(tol)
        target = _as_vector(target)
        nodes = [_as_node(n) for n in nodes]
        if not nodes:
            raise DimensionMismatchError("At least one interpolation node is required")
        m = len(target)
        for node in nodes:
            if len(node) != m:
                raise DimensionMismatchError(f"Node of length {len(node)} for a target of length {m}")
        A = np.array([node.reciprocal for node in nodes], dtype=np.float64).T  # (m, N)
        b = np.array(target.reciprocal(), dtype=np.float64)
        if len(nodes) > self.settings.interpolation.enumeration_max_nodes:
            return self._weights_by_linprog(A, b, tol)
        return self._weights_by_enumeration(A, b, tol)

    def _weights_by_enumeration(self, A: np.ndarray, b: np.ndarray, tol: float) -> "ConvexWeights | Infeasible":
        m, N = A.shape
        rank_tol = self.settings.interpolation.rank_tol
        rhs = np.append(b, 1.0)
        best = math.inf
        sizes = range(1, min(N, m + 1) + 1)
        for subset in sorted(chain.from_iterable(combinations(range(N), size) for size in sizes)):
            size = len(subset)
            M = np.vstack([A[:, subset], np.ones(size)])
            if np.linalg.matrix_rank(M, tol=rank_tol) < size:
                continue
            theta_s, *_ = np.linalg.lstsq(M, rhs, rcond=None)
            if theta_s.min() < -tol:
                continue
            theta_s = np.clip(theta_s, 0.0, None)
            theta_s = theta_s / theta_s.sum()
            residual = float(np.abs(A[:, subset] @ theta_s - b).max())
            best = min(best, residual)
            if residual <= tol:
                theta = np.zeros(N)
                theta[list(subset)] = theta_s
                return ConvexWeights(
                    tuple(theta), subset=subset, residual=residual,
                    sum_tol=self.settings.tolerance.simplex_sum,
                )
        logger.debug("no feasible subset among %d nodes (best residual %r)", N, best)
        return Infeasible(best)

    def _weights_by_linprog(self, A: np.ndarray, b: np.ndarray, tol: float) -> "ConvexWeights | Infeasible":
        m, N = A.shape
        # variables (theta_1..theta_N, s); minimize s with |A theta - b| <= s
        c = np.zeros(N + 1)
        c[-1] = 1.0
        ones = np.ones((m, 1))
        A_ub = np.vstack([np.hstack([A, -ones]), np.hstack([-A, -ones])])
        b_ub = np.concatenate([b, -b])
        A_eq = np.append(np.ones(N), 0.0).reshape(1, -1)
        res = optimize.linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1.0],
                               bounds=[(0.0, None)] * (N + 1), method="highs")
        if not res.success:
            return Infeasible(math.inf, f"linear program failed: {res.message}")
        theta = np.clip(res.x[:N], 0.0, None)
        theta = theta / theta.sum()
        residual = float(np.abs(A @ theta - b).max())
        if residual > tol:
            return Infeasible(residual)
        subset = tuple(int(k) for k in np.flatnonzero(theta > 0))
        return ConvexWeights(tuple(theta), subset=subset, residual=residual,
                             sum_tol=self.settings.tolerance.simplex_sum)

    def reconstruction_residual(self, target: Any, nodes: Sequence[NodeLike], weights: ConvexWeights) -> float:
        target = _as_vector(target)
        nodes = [_as_node(n) for n in nodes]
        if len(nodes) != len(weights):
            raise InconsistentWeightsError(f"{len(weights)} weights for {len(nodes)} nodes")
        A = np.array([node.reciprocal for node in nodes], dtype=np.float64).T
        return float(np.abs(A @ np.asarray(weights.theta) - np.asarray(target.reciprocal())).max())

    # ---------- product bound ----------
    def interpolation_bound(
        self,
        t: Any,
        target: Any,
        nodes: Sequence[NodeLike],
        weights: ConvexWeights,
        tol: Optional[float] = None,
    ) -> tuple[float, float]:
        """lhs = ||a||_target, rhs = prod_k ||a||_{q(k)}^theta_k.

        Raises:
            InconsistentWeightsError: when the weights do not reproduce the
                target reciprocals within ``tol``.
        """
        tol = self.settings.tolerance.weights if tol is None else float(tol)
        target = _as_vector(target)
        nodes = [_as_node(n) for n in nodes]
        residual = self.reconstruction_residual(target, nodes, weights)
        if residual > tol:
            raise InconsistentWeightsError(f"Weights miss the target reciprocals by {residual:.3e}")
        lhs = self.norms.mixed_norm(t, target)
        log_rhs = 0.0
        for node, theta in zip(nodes, weights.theta):
            if theta == 0.0:
                continue
            value = self.norms.mixed_norm(t, node.q)
            if value == 0.0:
                return lhs, 0.0
            log_rhs += theta * math.log(value)
        return lhs, math.exp(log_rhs)

    def two_stage_rhs(self, t: Any, nodes: Sequence[NodeLike], weights: ConvexWeights) -> float:
        """Right side rebuilt as ||a||_{q(1)}^theta_1 * (prod_{j>1} ||a||_{q(j)}^alpha_j)^(1-theta_1).

        alpha_j = theta_j / (1 - theta_1); equals the direct product when theta_1 < 1.
        """
        nodes = [_as_node(n) for n in nodes]
        norms = [self.norms.mixed_norm(t, node.q) for node in nodes]
        theta_1 = weights.theta[0]
        if any(v == 0.0 for v, th in zip(norms, weights.theta) if th > 0):
            return 0.0
        if theta_1 >= 1.0:
            return norms[0]
        log_inner = sum(
            (th / (1.0 - theta_1)) * math.log(v)
            for v, th in zip(norms[1:], weights.theta[1:]) if th > 0
        )
        log_first = theta_1 * math.log(norms[0]) if theta_1 > 0 else 0.0
        return math.exp(log_first + (1.0 - theta_1) * log_inner)

    # ---------- Blei decomposition ----------
    def blei_nodes(self, m: int, k: int, s: float, q: float) -> tuple[ExponentVector, list[ExponentNode], ConvexWeights]:
        """Interpolation data behind the Blei exponent.

        Target (rho, ..., rho); one node per k-subset S (lexicographic) with
        s on S and q elsewhere; uniform weights 1/binom(m, k).
        """
        rho = self.norms.blei_rho(m, k, s, q)
        subsets = list(combinations(range(int(m)), int(k)))
        nodes = [
            ExponentNode(ExponentVector(tuple(float(s) if j in subset else float(q) for j in range(int(m)))))
            for subset in subsets
        ]
        return ExponentVector.constant(rho, m), nodes, ConvexWeights.uniform(len(nodes))
