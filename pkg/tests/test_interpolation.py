import math

import numpy as np
import pytest

from bh_lab.domain.errors import DimensionMismatchError, InconsistentWeightsError
from bh_lab.domain.model.convex_weights import ConvexWeights, Infeasible
from bh_lab.domain.model.exponent_node import ExponentNode
from bh_lab.engine.services.interpolation_service import InterpolationService
from bh_lab.engine.services.rng_service import RngService

NODES = [ExponentNode.of(1, 2), ExponentNode.of(2, 1)]


class TestFindConvexWeights:
    def test_midpoint(self, interpolation):
        w = interpolation.find_convex_weights((4 / 3, 4 / 3), NODES)
        assert isinstance(w, ConvexWeights)
        assert w.theta == pytest.approx((0.5, 0.5), abs=1e-12)

    def test_vertex(self, interpolation):
        w = interpolation.find_convex_weights((1, 2), NODES + [ExponentNode.of(3, 3)])
        assert w.theta == pytest.approx((1.0, 0.0, 0.0), abs=1e-12)
        assert w.subset == (0,)

    def test_lexicographic_subset_order(self, interpolation):
        # node 2 alone reaches the target, but (0, 1) precedes (2,)
        nodes = NODES + [ExponentNode.of(4 / 3, 4 / 3)]
        w = interpolation.find_convex_weights((4 / 3, 4 / 3), nodes)
        assert w.subset == (0, 1)
        assert w.theta == pytest.approx((0.5, 0.5, 0.0), abs=1e-12)

    def test_outside_hull(self, interpolation):
        result = interpolation.find_convex_weights((2, 2), NODES)
        assert isinstance(result, Infeasible)
        assert result.residual > 1e-3

    def test_length_mismatch(self, interpolation):
        with pytest.raises(DimensionMismatchError):
            interpolation.find_convex_weights((2, 2, 2), NODES)

    def test_no_nodes(self, interpolation):
        with pytest.raises(DimensionMismatchError):
            interpolation.find_convex_weights((2, 2), [])

    def test_linear_program_for_many_nodes(self, interpolation):
        target, nodes, uniform = interpolation.blei_nodes(4, 2, 1.0, 2.0)
        assert len(nodes) == 6
        w = InterpolationService(interpolation.norms).find_convex_weights(target, nodes * 3)
        assert isinstance(w, ConvexWeights)
        assert interpolation.reconstruction_residual(target, nodes * 3, w) <= 1e-10

    def test_reconstruction_on_random_hulls(self, interpolation):
        for trial in range(50):
            rng = RngService.make(11, 0, trial)
            m = int(rng.integers(1, 4))
            count = int(rng.integers(2, 5))
            nodes = [ExponentNode.of(*(1.0 + 4.0 * rng.random(m))) for _ in range(count)]
            theta = ConvexWeights.normalized(rng.random(count) + 1e-3)
            recip = np.array([n.reciprocal for n in nodes]).T @ np.array(theta.theta)
            target = tuple(1.0 / recip)
            found = interpolation.find_convex_weights(target, nodes)
            assert isinstance(found, ConvexWeights)
            assert interpolation.reconstruction_residual(target, nodes, found) <= 1e-10


class TestInterpolationBound:
    def test_identity_midpoint(self, interpolation):
        # ||I||_(1,2) = 2 and ||I||_(2,1) = sqrt(2): the bound is attained
        lhs, rhs = interpolation.interpolation_bound(np.eye(2), (4 / 3, 4 / 3), NODES, ConvexWeights((0.5, 0.5)))
        assert lhs == pytest.approx(2 ** 0.75, rel=1e-14)
        assert rhs == pytest.approx(2 ** 0.75, rel=1e-14)

    def test_vertex_gives_equality(self, interpolation):
        a = np.arange(1.0, 7.0).reshape(2, 3)
        lhs, rhs = interpolation.interpolation_bound(a, (1, 2), NODES, ConvexWeights((1.0, 0.0)))
        assert lhs == pytest.approx(rhs, rel=1e-14)

    def test_inconsistent_weights(self, interpolation):
        with pytest.raises(InconsistentWeightsError):
            interpolation.interpolation_bound(np.eye(2), (4 / 3, 4 / 3), NODES, ConvexWeights((1.0, 0.0)))

    def test_two_stage_matches_direct_product(self, interpolation):
        rng = np.random.default_rng(5)
        a = rng.standard_normal((3, 2, 2))
        nodes = [ExponentNode.of(1, 2, 2), ExponentNode.of(2, 1, 2), ExponentNode.of(2, 2, 1)]
        weights = ConvexWeights((0.2, 0.3, 0.5))
        target = tuple(1.0 / x for x in np.array([n.reciprocal for n in nodes]).T @ np.array(weights.theta))
        _, rhs = interpolation.interpolation_bound(a, target, nodes, weights)
        assert interpolation.two_stage_rhs(a, nodes, weights) == pytest.approx(rhs, rel=1e-12)

    def test_blei_nodes_give_blei_rhs(self, interpolation, norms):
        a = np.random.default_rng(8).standard_normal((3, 3, 3))
        target, nodes, weights = interpolation.blei_nodes(3, 2, 1.0, 2.0)
        lhs, rhs = interpolation.interpolation_bound(a, target, nodes, weights)
        assert target.values == pytest.approx((norms.blei_rho(3, 2, 1.0, 2.0),) * 3)
        assert lhs <= rhs * (1 + 1e-10)
        assert math.isfinite(rhs)
