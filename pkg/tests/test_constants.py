import math

import pytest
from hypothesis import given, settings, strategies as st

from bh_lab.config.constants_settings import ConstantsSettings
from bh_lab.config.settings import Settings
from bh_lab.domain.errors import ExponentRangeError, MissingKahaneConstantError, ParameterRangeError
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.recursion_mode import RecursionMode
from bh_lab.domain.model.summing_params import SummingParams
from bh_lab.engine.services.constants_service import ConstantsService

TWO_OVER_SQRT_PI = 2 / math.sqrt(math.pi)
T_GRID = [1.0 + 0.1 * k for k in range(10)]


@st.composite
def exponent_lists(draw):
    q = draw(st.floats(2.0, 4.0))
    n = draw(st.integers(1, 8))
    rs = draw(st.lists(st.floats(1.0, q * 0.95), min_size=n, max_size=n))
    return rs, q


class TestGamma:
    def test_values(self, constants):
        assert constants.gamma_fn(1.0) == pytest.approx(1.0, rel=1e-15)
        assert constants.gamma_fn(1.5) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-14)
        assert constants.gamma_fn(5 / 3) == pytest.approx(0.9027452930, abs=1e-10)

    def test_log_gamma_agrees(self, constants):
        assert constants.log_gamma(7.25) == pytest.approx(math.log(constants.gamma_fn(7.25)), rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, float("nan")])
    def test_domain(self, constants, x):
        with pytest.raises(ParameterRangeError):
            constants.gamma_fn(x)

    def test_p_zero(self, constants):
        p0 = constants.p_zero()
        assert 1.84 < p0 < 1.86
        assert abs(math.gamma((p0 + 1) / 2) - math.sqrt(math.pi) / 2) < 1e-13


class TestKhinchine:
    @pytest.mark.parametrize("field", ["real", "complex"])
    def test_p_two_is_one(self, constants, field):
        assert constants.khinchine(2.0, field) == pytest.approx(1.0, abs=1e-12)

    def test_p_one(self, constants):
        assert constants.khinchine(1.0, FieldTag.REAL) == pytest.approx(math.sqrt(2), rel=1e-15)
        assert constants.khinchine(1.0, FieldTag.COMPLEX) == pytest.approx(TWO_OVER_SQRT_PI, rel=1e-15)

    def test_real_branches_meet_at_p_zero(self, constants):
        p0 = constants.p_zero()
        low = 2 ** (1 / p0 - 0.5)
        high = (math.gamma((p0 + 1) / 2) / math.sqrt(math.pi)) ** (-1 / p0) / math.sqrt(2)
        assert low == pytest.approx(high, rel=1e-10)
        assert constants.khinchine(p0, "real") == pytest.approx(low, rel=1e-10)

    def test_complex_below_real(self, constants):
        for p in (1.0, 1.3, 1.7, 1.95):
            assert constants.khinchine(p, "complex") <= constants.khinchine(p, "real")

    @pytest.mark.parametrize("p", [0.99, 2.01])
    def test_range(self, constants, p):
        with pytest.raises(ExponentRangeError):
            constants.khinchine(p, "real")

    def test_vectorized_matches_scalar(self, constants):
        ps = [1.0, 1.25, 1.5, 1.9, 2.0]
        many = constants.log_khinchine_many(ps, "real")
        for p, value in zip(ps, many):
            assert value == pytest.approx(constants.log_khinchine(p, "real"), abs=1e-15)


class TestOmegaCalculus:
    def test_omega2_equal_arguments(self, constants):
        assert constants.omega2(1.0, 1.0, 2.0) == pytest.approx(4 / 3, rel=1e-15)
        assert constants.f2(1.3, 1.3, 3.0) == pytest.approx(0.5, rel=1e-15)

    def test_f2_complementary(self, constants):
        assert constants.f2(1.2, 1.7, 2.5) + constants.f2(1.7, 1.2, 2.5) == pytest.approx(1.0, rel=1e-15)

    def test_omega_n_of_ones_is_bh_exponent(self, constants):
        for m in range(1, 9):
            assert constants.omega_n([1.0] * m, 2.0) == pytest.approx(2 * m / (m + 1), rel=1e-14)

    def test_single_entry(self, constants):
        assert constants.omega_n([1.4], 3.0) == pytest.approx(1.4, rel=1e-15)
        assert constants.f_n([1.4], 3.0) == [1.0]

    def test_symmetric_weights(self, constants):
        assert constants.f_n([1.5] * 4, 2.0) == pytest.approx([0.25] * 4, rel=1e-14)

    def test_range(self, constants):
        with pytest.raises(ExponentRangeError):
            constants.omega_n([1.0, 2.0], 2.0)
        with pytest.raises(ExponentRangeError):
            constants.omega2(1.0, 1.0, 1.5)

    @pytest.mark.slow
    @given(exponent_lists())
    @settings(max_examples=10_000, deadline=None)
    def test_recursion_matches_closed_form(self, constants, data):
        rs, q = data
        closed = constants.omega_n(rs, q, RecursionMode.CLOSED)
        recursive = constants.omega_n(rs, q, RecursionMode.RECURSIVE)
        assert recursive == pytest.approx(closed, rel=1e-12)
        f_closed = constants.f_n(rs, q, RecursionMode.CLOSED)
        f_rec = constants.f_n(rs, q, RecursionMode.RECURSIVE)
        assert f_rec == pytest.approx(f_closed, rel=1e-12)
        assert sum(f_rec) == pytest.approx(1.0, rel=1e-12)

    @given(exponent_lists())
    @settings(max_examples=100, deadline=None)
    def test_interpolated_exponents_equal_omega(self, constants, data):
        rs, q = data
        omega = constants.omega_n(rs, q)
        assert constants.interpolated_exponents(rs, q) == pytest.approx([omega] * len(rs), rel=1e-12)


class TestSigma:
    def test_unit_constants(self, constants):
        params = SummingParams(2.0, (1.0, 1.5), (2, 1), 1.0, {1.0: 1.0, 1.5: 1.0})
        assert constants.sigma_n(params) == pytest.approx(1.0)

    def test_symmetric_data(self, constants):
        params = SummingParams(3.0, (1.5, 1.5), (2, 2), 1.0, {1.5: 1.3})
        assert constants.sigma_n(params) == pytest.approx(1.3 ** 2, rel=1e-14)

    def test_scalar_specialization(self, constants):
        params = constants.scalar_params([1.0, 1.0], [1, 1], "complex")
        assert constants.sigma_n(params) == pytest.approx(TWO_OVER_SQRT_PI, rel=1e-14)

    def test_three_blocks_need_derived_constants(self, constants):
        params = SummingParams(2.0, (1.0, 1.0, 1.0), (1, 1, 1), 1.0, {1.0: 1.2})
        with pytest.raises(MissingKahaneConstantError):
            constants.sigma_n(params)

    def test_three_blocks_with_hook(self, constants):
        params = constants.scalar_params([1.0, 1.0, 1.0], [1, 1, 1], "real")
        assert constants.sigma_n(params) >= 1.0

    def test_single_block_rejected(self, constants):
        with pytest.raises(ParameterRangeError):
            constants.sigma_n(SummingParams(2.0, (1.0,), (1,)))


class TestSummingExponents:
    def test_r_n_exponent(self, constants):
        for m in range(2, 7):
            assert constants.r_N_exponent(1, m, 2.0, 1.0) == pytest.approx(2 * m / (m + 1), rel=1e-15)
        assert constants.r_N_exponent(4, 5, 2.5, 2.5) == pytest.approx(2.5, rel=1e-15)
        # qrN / (nq + (N-n)r) = 8 / 6
        assert constants.r_N_exponent(2, 4, 2.0, 1.0) == pytest.approx(4 / 3, rel=1e-15)

    def test_range(self, constants):
        with pytest.raises(ParameterRangeError):
            constants.r_N_exponent(3, 3, 2.0, 1.0)
        with pytest.raises(ExponentRangeError):
            constants.r_N_exponent(1, 3, 2.0, 2.5)

    def test_comparison_examples(self, constants):
        c = constants.exponent_comparison(2, 5, 2.0, 1.0)
        assert (c.k, c.l) == (2, 1)
        assert c.old == pytest.approx(1.5)
        assert c.new == pytest.approx(10 / 7)
        assert c.verdict == "strict"
        c = constants.exponent_comparison(2, 3, 2.0, 1.0)
        assert (c.old, c.new) == pytest.approx((4 / 3, 6 / 5))
        assert constants.exponent_comparison(2, 4, 2.0, 1.0).verdict == "equal"
        assert constants.exponent_comparison(1, 3, 2.0, 1.0).new == pytest.approx(1.5)

    def test_strict_iff_not_divisible(self, constants):
        for N in range(2, 13):
            for n in range(1, N):
                for q in (2.0, 3.0):
                    for r in (1.0, 1.5):
                        c = constants.exponent_comparison(n, N, q, r)
                        if N % n:
                            assert c.old > c.new and c.verdict == "strict"
                        else:
                            assert c.old == pytest.approx(c.new, rel=1e-12) and c.verdict == "equal"

    def test_bh_exponent(self, constants):
        assert constants.bh_exponent(1, 1.4) == pytest.approx(1.4)
        assert constants.bh_exponent(2, 1.0) == pytest.approx(4 / 3)
        for m in range(1, 10):
            assert constants.bh_exponent(m, 1.0) == pytest.approx(2 * m / (m + 1))

    @pytest.mark.parametrize("m, t", [(0, 1.0), (2, 2.0), (2, 0.9)])
    def test_bh_exponent_range(self, constants, m, t):
        with pytest.raises(ValueError):
            constants.bh_exponent(m, t)


class TestBhConstants:
    def test_degree_one(self, constants):
        for field in FieldTag:
            assert constants.c_constant_recursive(1, 1.3, field) == 1.0
            assert constants.c_constant_closed(1, 1.3, field) == 1.0

    def test_degree_two_complex(self, constants):
        assert constants.c_constant_recursive(2, 1.0, "complex") == pytest.approx(TWO_OVER_SQRT_PI, abs=1e-12)
        assert constants.c_constant_closed(2, 1.0, "complex") == pytest.approx(TWO_OVER_SQRT_PI, abs=1e-12)

    def test_degree_two_is_khinchine_at_t(self, constants):
        t = 1.4
        expected = math.gamma((t + 2) / 2) ** (-1 / t)
        assert constants.c_constant_closed(2, t, "complex") == pytest.approx(expected, rel=1e-13)

    def test_degree_three_complex(self, constants):
        expected = TWO_OVER_SQRT_PI * math.gamma(5 / 3) ** (-0.75)
        value = constants.c_constant_closed(3, 1.0, "complex")
        assert value == pytest.approx(expected, rel=1e-12)
        assert value == pytest.approx(1.218, abs=1e-3)

    def test_degree_four_recursive_complex(self, constants):
        expected = TWO_OVER_SQRT_PI * math.gamma(5 / 3) ** (-1.5)
        assert constants.c_constant_recursive(4, 1.0, "complex") == pytest.approx(expected, rel=1e-12)

    def test_closed_never_exceeds_recursive(self, constants):
        for field in FieldTag:
            for t in T_GRID:
                for m in range(1, 31):
                    closed = constants.c_constant_closed(m, t, field)
                    assert closed <= constants.c_constant_recursive(m, t, field) * (1 + 1e-10)

    def test_displayed_form_agrees_with_product(self, constants):
        for field in FieldTag:
            for t in T_GRID:
                for m in range(1, 51):
                    check = constants.constants_cross_check(m, t, field)
                    assert check["agree"], (m, t, field, check["rel_diff"])

    def test_displayed_source_flag(self):
        service = ConstantsService(Settings(constants=ConstantsSettings(closed_form_source="displayed")))
        product = service.c_constant_product(20, 1.2, "real")
        assert service.c_constant_closed(20, 1.2, "real") == pytest.approx(product, rel=1e-10)

    def test_m0_threshold(self, constants):
        assert constants.m0_threshold(1.0) == 13
        values = [constants.m0_threshold(t) for t in T_GRID]
        assert all(a >= b for a, b in zip(values, values[1:]))


class TestAsymptotics:
    def test_envelope_exponents(self, constants):
        assert constants.envelope_exponent(1.0, "complex") == pytest.approx(0.21139, abs=1e-5)
        assert constants.envelope_exponent(1.0, "real") == pytest.approx(0.36482, abs=1e-5)

    @pytest.mark.parametrize("t", [1.0, 1.5])
    def test_running_max_stabilizes(self, constants, t):
        env = constants.asymptotic_envelope(t, "complex", 10_000)
        assert env.stabilized
        assert env.kappa_est >= 1.0
        assert 1 <= env.argmax_m <= 10_000

    def test_small_scan_rejected(self, constants):
        with pytest.raises(ParameterRangeError):
            constants.asymptotic_envelope(1.0, "complex", 5)


class TestConstantsReport:
    def test_rows_and_metadata(self, constants):
        report = constants.constants_report(range(1, 9), [1.0], ["complex"])
        assert len(report) == 8
        assert report.row(2, 1.0, FieldTag.COMPLEX).c_closed == pytest.approx(TWO_OVER_SQRT_PI, rel=1e-12)
        assert report.metadata["build"].startswith("bh-lab ")
        assert 1.84 < report.metadata["p0"] < 1.86

    def test_improvement_at_most_one(self, constants):
        report = constants.constants_report(range(1, 12), [1.0, 1.5], list(FieldTag))
        assert all(row.improvement <= 1 + 1e-10 for row in report.rows)
