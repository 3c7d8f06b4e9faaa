from __future__ import annotations

import logging
import math
from functools import lru_cache, partial
from typing import Iterable, Sequence

import numpy as np
from scipy import optimize, special

import bh_lab
from bh_lab.config import SETTINGS
from bh_lab.domain.errors import ExponentRangeError, ParameterRangeError
from bh_lab.domain.model.asymptotic_envelope import AsymptoticEnvelope
from bh_lab.domain.model.constants_report import ConstantsReport, ConstantsRow
from bh_lab.domain.model.exponent_comparison import ExponentComparison
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.recursion_mode import RecursionMode
from bh_lab.domain.model.summing_params import SummingParams
from bh_lab.domain.numbers import LN2, SQRT_PI, LOG_SQRT_PI

logger = logging.getLogger(__name__)


# ---------- cached primitives (lru_cache is safe for concurrent readers) ----------
@lru_cache(maxsize=4)
def _p_zero(lo: float, hi: float, xtol: float) -> float:
    half_sqrt_pi = SQRT_PI / 2.0
    return float(optimize.bisect(lambda p: special.gamma((p + 1.0) / 2.0) - half_sqrt_pi, lo, hi, xtol=xtol))


def _log_khinchine_array(p: np.ndarray, field: FieldTag, p0: float) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    if field is FieldTag.COMPLEX:
        return -special.gammaln((p + 2.0) / 2.0) / p
    low = (1.0 / p - 0.5) * LN2
    high = -0.5 * LN2 - (special.gammaln((p + 1.0) / 2.0) - LOG_SQRT_PI) / p
    return np.where(p <= p0, low, high)


@lru_cache(maxsize=None)
def _log_c_recursive(m: int, t: float, field: FieldTag, p0: float) -> float:
    if m == 1:
        return 0.0

    def log_a(p: float) -> float:
        return float(_log_khinchine_array(np.array(p), field, p0))

    if m % 2 == 0:
        p = 2.0 * m * t / ((m - 2) * t + 4.0)
        return (m / 2) * log_a(p) + _log_c_recursive(m // 2, t, field, p0)
    p_lo = 2.0 * (m - 1) * t / ((m - 3) * t + 4.0)
    p_hi = 2.0 * (m + 1) * t / ((m - 1) * t + 4.0)
    lo = (m + 1) / 2 * log_a(p_lo) + _log_c_recursive((m - 1) // 2, t, field, p0)
    hi = (m - 1) / 2 * log_a(p_hi) + _log_c_recursive((m + 1) // 2, t, field, p0)
    return (m - 1) / (2 * m) * lo + (m + 1) / (2 * m) * hi


class ConstantsService:
    """Closed-form and recursive evaluation of the constants and exponents.

    Covers Gamma and log-Gamma, the threshold p0, Khinchine constants for
    both fields, the omega/f exponent calculus, sigma_n, summing exponents,
    and the Bohnenblust-Hille variant constants C_{m,t}. Every product of
    constants is accumulated in log space and exponentiated once.
    """

    def __init__(self, settings=None):
        self.settings = settings or SETTINGS

    # ---------- Gamma ----------
    @staticmethod
    def gamma_fn(x: float) -> float:
        x = float(x)
        if not math.isfinite(x) or x <= 0.0:
            raise ParameterRangeError(f"Gamma is evaluated for x > 0 only, got {x}")
        return float(special.gamma(x))

    @staticmethod
    def log_gamma(x: float) -> float:
        x = float(x)
        if not math.isfinite(x) or x <= 0.0:
            raise ParameterRangeError(f"log-Gamma is evaluated for x > 0 only, got {x}")
        return float(special.gammaln(x))

    def p_zero(self) -> float:
        """Root p0 in (1, 2) of Gamma((p+1)/2) = sqrt(pi)/2, about 1.8474."""
        lo, hi = self.settings.constants.p0_bracket
        return _p_zero(float(lo), float(hi), float(self.settings.constants.p0_xtol))

    # ---------- Khinchine ----------
    @staticmethod
    def _check_p(p: float) -> float:
        p = float(p)
        if not (1.0 <= p <= 2.0):
            raise ExponentRangeError(f"Khinchine constants are defined for 1 <= p <= 2, got {p}")
        return p

    def khinchine(self, p: float, field: "FieldTag | str") -> float:
        """Best constant A_p in ||x||_2 <= A_p (E|sum eps_k x_k|^p)^(1/p).

        Real: 2^(1/p - 1/2) for p <= p0, (1/sqrt 2)(Gamma((p+1)/2)/sqrt pi)^(-1/p) above.
        Complex (uniform phases): Gamma((p+2)/2)^(-1/p).

        Examples:
            >>> round(ConstantsService().khinchine(1.0, "real"), 12)
            1.414213562373
        """
        return math.exp(self.log_khinchine(p, field))

    def log_khinchine(self, p: float, field: "FieldTag | str") -> float:
        p = self._check_p(p)
        return float(_log_khinchine_array(np.array(p), FieldTag.parse(field), self.p_zero()))

    def log_khinchine_many(self, ps: Iterable[float], field: "FieldTag | str") -> np.ndarray:
        ps = np.asarray(list(ps) if not isinstance(ps, np.ndarray) else ps, dtype=np.float64)
        if ps.size and (ps.min() < 1.0 or ps.max() > 2.0):
            raise ExponentRangeError("Khinchine constants are defined for 1 <= p <= 2")
        return _log_khinchine_array(ps, FieldTag.parse(field), self.p_zero())

    # ---------- omega / f calculus ----------
    @staticmethod
    def _check_pair(x: float, y: float, q: float) -> None:
        if not math.isfinite(q) or q < 2.0:
            raise ExponentRangeError(f"q must be >= 2, got {q}")
        for v in (x, y):
            if not (1.0 <= v < q):
                raise ExponentRangeError(f"Exponents must lie in [1, q), got {v} with q={q}")

    def omega2(self, x: float, y: float, q: float) -> float:
        """(q^2(x+y) - 2qxy) / (q^2 - xy); symmetric in x and y."""
        self._check_pair(x, y, q)
        return (q * q * (x + y) - 2.0 * q * x * y) / (q * q - x * y)

    def f2(self, x: float, y: float, q: float) -> float:
        """(q^2 x - qxy) / (q^2(x+y) - 2qxy); f2(x, y) + f2(y, x) = 1."""
        self._check_pair(x, y, q)
        return (q * q * x - q * x * y) / (q * q * (x + y) - 2.0 * q * x * y)

    @staticmethod
    def _check_list(rs: Sequence[float], q: float) -> list[float]:
        rs = [float(r) for r in rs]
        if not rs:
            raise ParameterRangeError("Exponent list must not be empty")
        if not math.isfinite(q) or q < 2.0:
            raise ExponentRangeError(f"q must be >= 2, got {q}")
        for r in rs:
            if not (1.0 <= r < q):
                raise ExponentRangeError(f"Exponents must lie in [1, q), got {r} with q={q}")
        return rs

    def omega_n(self, rs: Sequence[float], q: float, mode: "RecursionMode | str" = RecursionMode.CLOSED) -> float:
        """omega_n(r_1, ..., r_n) = omega2(r_n, omega_{n-1}); closed form qR/(1+R), R = sum r/(q-r)."""
        rs = self._check_list(rs, q)
        if RecursionMode(mode) is RecursionMode.CLOSED:
            big_r = sum(r / (q - r) for r in rs)
            return q * big_r / (1.0 + big_r)
        w = rs[0]
        for x in rs[1:]:
            w = self.omega2(x, w, q)
        return w

    def f_n(self, rs: Sequence[float], q: float, mode: "RecursionMode | str" = RecursionMode.CLOSED) -> list[float]:
        """Weights f_n^k; closed form r_k / (R (q - r_k)). They sum to 1."""
        rs = self._check_list(rs, q)
        if len(rs) == 1:
            return [1.0]
        if RecursionMode(mode) is RecursionMode.CLOSED:
            big_r = sum(r / (q - r) for r in rs)
            return [r / (big_r * (q - r)) for r in rs]
        f = [self.f2(rs[0], rs[1], q), self.f2(rs[1], rs[0], q)]
        w = self.omega2(rs[1], rs[0], q)
        for x in rs[2:]:
            shrink = self.f2(w, x, q)
            f = [fk * shrink for fk in f] + [self.f2(x, w, q)]
            w = self.omega2(x, w, q)
        return f

    def interpolated_exponents(self, r_list: Sequence[float], q: float) -> list[float]:
        """Block exponents q_k with 1/q_k = theta_k/r_k + (1-theta_k)/q, theta = f_n; all equal omega_n."""
        theta = self.f_n(r_list, q)
        return [1.0 / (th / r + (1.0 - th) / q) for th, r in zip(theta, r_list)]

    # ---------- sigma_n ----------
    def scalar_params(self, r_list: Sequence[float], block_sizes: Sequence[int], field: "FieldTag | str") -> SummingParams:
        """Scalar target: q = 2, C_2(K) = 1 and K_{r,2} = khinchine(r, field)."""
        return SummingParams(
            q=2.0,
            r_list=tuple(r_list),
            block_sizes=tuple(block_sizes),
            cotype_constant=1.0,
            kahane_hook=partial(self.khinchine, field=FieldTag.parse(field)),
        )

    def sigma_n(self, params: SummingParams) -> float:
        """sigma_n of a multiple-exponent summing estimate, from the sigma_2 base case and its recursion.

        Raises:
            MissingKahaneConstantError: when a needed K_{r,2} (including the
                derived omega_{n-1} exponents) is neither tabulated nor hooked.
        """
        if params.n < 2:
            raise ParameterRangeError(f"sigma_n needs n >= 2 blocks, got {params.n}")
        q, rs, sizes = params.q, params.r_list, params.block_sizes

        def log_a(r: float) -> float:
            return math.log(params.a_constant(r))

        r1, r2 = rs[0], rs[1]
        log_sigma = sizes[1] * self.f2(r1, r2, q) * log_a(r1) + sizes[0] * self.f2(r2, r1, q) * log_a(r2)
        for n in range(3, params.n + 1):
            w = self.omega_n(rs[: n - 1], q, RecursionMode.RECURSIVE)
            rn = rs[n - 1]
            outer = sum(sizes[: n - 1])
            f_w = self.f2(w, rn, q)
            log_sigma = (
                outer * self.f2(rn, w, q) * log_a(rn)
                + sizes[n - 1] * f_w * log_a(w)
                + f_w * log_sigma
            )
        return math.exp(log_sigma)

    # ---------- summing exponents ----------
    @staticmethod
    def r_N_exponent(n: int, N: int, q: float, r: float) -> float:
        """qrN / (nq + (N-n)r), for 1 <= n < N and 1 <= r <= q."""
        n, N, q, r = int(n), int(N), float(q), float(r)
        if not (1 <= n < N):
            raise ParameterRangeError(f"Need 1 <= n < N, got n={n}, N={N}")
        if not (1.0 <= r <= q) or not math.isfinite(q):
            raise ExponentRangeError(f"Need 1 <= r <= q, got r={r}, q={q}")
        return q * r * N / (n * q + (N - n) * r)

    def exponent_comparison(self, n: int, N: int, q: float, r: float) -> ExponentComparison:
        """Block-splitting exponent vs the N-separate exponent; "strict" iff n does not divide N."""
        new = self.r_N_exponent(n, N, q, r)
        n, N, q, r = int(n), int(N), float(q), float(r)
        k, l = divmod(N, n)
        if l != 0:
            old = q * (k + 1) * r / (q + k * r)
        else:
            old = q * k * r / (q + (k - 1) * r)
        tol = self.settings.tolerance.identity_rel * max(1.0, abs(new))
        verdict = "equal" if abs(old - new) <= tol else "strict"
        return ExponentComparison(n=n, N=N, q=q, r=r, k=k, l=l, old=old, new=new, verdict=verdict)

    @staticmethod
    def _check_mt(m: int, t: float) -> tuple[int, float]:
        if int(m) != m or int(m) < 1:
            raise ParameterRangeError(f"Degree m must be a positive integer, got {m}")
        t = float(t)
        if not (1.0 <= t < 2.0):
            raise ExponentRangeError(f"t must lie in [1, 2), got {t}")
        return int(m), t

    def bh_exponent(self, m: int, t: float) -> float:
        """2tm / (2 + (m-1)t); equals t at m = 1 and 2m/(m+1) at t = 1."""
        m, t = self._check_mt(m, t)
        return 2.0 * t * m / (2.0 + (m - 1) * t)

    # ---------- C_{m,t} ----------
    def c_constant_recursive(self, m: int, t: float, field: "FieldTag | str") -> float:
        """C_{m,t} by the halving recursion (C_1 = 1; even and odd m handled separately)."""
        m, t = self._check_mt(m, t)
        return math.exp(_log_c_recursive(m, t, FieldTag.parse(field), self.p_zero()))

    def _log_c_product_table(self, m_max: int, t: float, field: FieldTag) -> np.ndarray:
        # entry m-1 holds log C_{m,t} = sum_{k<m} log A_{2tk/(2+(k-1)t)}
        ks = np.arange(1, m_max, dtype=np.float64)
        ps = 2.0 * t * ks / (2.0 + (ks - 1.0) * t)
        logs = self.log_khinchine_many(ps, field) if ks.size else np.zeros(0)
        return np.concatenate(([0.0], np.cumsum(logs)))

    def c_constant_product(self, m: int, t: float, field: "FieldTag | str") -> float:
        """prod_{k=1}^{m-1} A_{2tk/(2+(k-1)t)} (empty product at m = 1)."""
        m, t = self._check_mt(m, t)
        return math.exp(float(self._log_c_product_table(m, t, FieldTag.parse(field))[m - 1]))

    def c_constant_displayed(self, m: int, t: float, field: "FieldTag | str") -> float:
        """C_{m,t} evaluated term by term from the displayed Gamma-product formulas.

        Complex: prod_{j=2}^m Gamma(2 - (2-t)/(2+t(j-2)))^(-(2+t(j-2))/(2t(j-1))).
        Real: 2^((1/t - 1/2) H_{m-1}) up to the threshold m0, beyond it the
        piecewise product with the composite power of 2.
        """
        m, t = self._check_mt(m, t)
        field = FieldTag.parse(field)
        if m == 1:
            return 1.0
        j = np.arange(2, m + 1, dtype=np.float64)
        denom = 2.0 + t * (j - 2.0)
        if field is FieldTag.COMPLEX:
            logs = special.gammaln(2.0 - (2.0 - t) / denom) * (-denom / (2.0 * t * (j - 1.0)))
            return math.exp(float(logs.sum()))
        m0 = self.m0_threshold(t)
        if m <= m0:
            harmonic = float((1.0 / np.arange(1, m)).sum())
            return 2.0 ** ((1.0 / t - 0.5) * harmonic)
        log_first = 0.0
        if m0 > 1:
            jj = np.arange(2, m0 + 1, dtype=np.float64)
            num = t + 2 * m0 - 2 * t * m0 + m * t + jj * t * m0 - jj * m * t - 2.0
            log_first = float((num / (2.0 * t * (m0 - 1) * (jj - 1.0))).sum()) * LN2
        jj = np.arange(m0 + 1, m + 1, dtype=np.float64)
        d = 2.0 + t * (jj - 2.0)
        base = special.gammaln(1.5 - (2.0 - t) / d) - LOG_SQRT_PI
        log_second = float((base * (t * (jj - 2.0) + 2.0) / (2.0 * t - 2.0 * jj * t)).sum())
        return math.exp(log_first + log_second)

    def constants_cross_check(self, m: int, t: float, field: "FieldTag | str") -> dict:
        """Product form vs displayed form; ``agree`` within the configured relative tolerance."""
        product = self.c_constant_product(m, t, field)
        displayed = self.c_constant_displayed(m, t, field)
        rel = abs(product - displayed) / product
        return {
            "product": product,
            "displayed": displayed,
            "rel_diff": rel,
            "agree": rel <= self.settings.constants.displayed_agreement_rel,
        }

    def c_constant_closed(self, m: int, t: float, field: "FieldTag | str") -> float:
        """C_{m,t} from the closed formula.

        The product of Khinchine constants is the default source. With
        ``closed_form_source = "displayed"`` the displayed formula is used
        unless it disagrees with the product form, in which case the product
        form wins and a warning is logged.
        """
        if self.settings.constants.closed_form_source != "displayed":
            return self.c_constant_product(m, t, field)
        check = self.constants_cross_check(m, t, field)
        if not check["agree"]:
            logger.warning(
                "Displayed C_{%d,%s} disagrees with the product form (rel %.3e); using the product form",
                m, t, check["rel_diff"],
            )
            return check["product"]
        return check["displayed"]

    def m0_threshold(self, t: float) -> int:
        """Largest integer <= (2p0 + 2t(1-p0)) / (t(2-p0)); 13 at t = 1."""
        t = float(t)
        if not (1.0 <= t < 2.0):
            raise ExponentRangeError(f"t must lie in [1, 2), got {t}")
        p0 = self.p_zero()
        return int(math.floor((2.0 * p0 + 2.0 * t * (1.0 - p0)) / (t * (2.0 - p0))))

    # ---------- asymptotics ----------
    def envelope_exponent(self, t: float, field: "FieldTag | str") -> float:
        t = float(t)
        gamma = self.settings.constants.euler_gamma
        if FieldTag.parse(field) is FieldTag.COMPLEX:
            return (gamma - 1.0) * (t - 2.0) / (2.0 * t)
        return (gamma - 2.0 + LN2) * (t - 2.0) / (2.0 * t)

    def asymptotic_envelope(self, t: float, field: "FieldTag | str", m_max: int) -> AsymptoticEnvelope:
        """kappa estimate = max_{m <= m_max} C_{m,t} / m^exponent, with running-max growth over the last decade."""
        _, t = self._check_mt(1, t)
        field = FieldTag.parse(field)
        m_max = int(m_max)
        if m_max < self.settings.constants.envelope_min_m:
            raise ParameterRangeError(
                f"m_max must be >= {self.settings.constants.envelope_min_m}, got {m_max}"
            )
        exponent = self.envelope_exponent(t, field)
        log_c = self._log_c_product_table(m_max, t, field)
        ms = np.arange(1, m_max + 1, dtype=np.float64)
        log_ratio = log_c - exponent * np.log(ms)
        running = np.maximum.accumulate(log_ratio)
        argmax = int(np.argmax(log_ratio)) + 1
        start = max(m_max // 10, 1) - 1
        increase = math.expm1(float(running[-1] - running[start]))
        return AsymptoticEnvelope(
            t=t,
            field=field,
            m_max=m_max,
            exponent=exponent,
            kappa_est=math.exp(float(running[-1])),
            argmax_m=argmax,
            last_decade_increase=increase,
        )

    # ---------- tables ----------
    def constants_report(
        self,
        m_values: Iterable[int],
        t_values: Iterable[float],
        fields: Iterable["FieldTag | str"],
        include_displayed: bool = True,
    ) -> ConstantsReport:
        """Rows ordered by field, then t, then m."""
        report = ConstantsReport(metadata=self.report_metadata())
        m_values = list(m_values)
        t_values = list(t_values)
        for field in fields:
            field = FieldTag.parse(field)
            for t in t_values:
                for m in m_values:
                    report.rows.append(
                        ConstantsRow(
                            m=int(m),
                            t=float(t),
                            field=field,
                            exponent=self.bh_exponent(m, t),
                            c_recursive=self.c_constant_recursive(m, t, field),
                            c_closed=self.c_constant_closed(m, t, field),
                            c_displayed=self.c_constant_displayed(m, t, field) if include_displayed else None,
                        )
                    )
        return report

    def report_metadata(self) -> dict:
        return {
            "build": f"bh-lab {bh_lab.__version__}",
            "p0": self.p_zero(),
            "closed_form_source": self.settings.constants.closed_form_source,
            "tolerances": {
                "inequality_rel": self.settings.tolerance.inequality_rel,
                "identity_rel": self.settings.tolerance.identity_rel,
                "displayed_agreement_rel": self.settings.constants.displayed_agreement_rel,
            },
        }
