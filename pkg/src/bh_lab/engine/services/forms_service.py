from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import Any, Optional, Sequence

import numpy as np

from bh_lab.config import SETTINGS
from bh_lab.domain.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    ExponentRangeError,
    InconsistentWeightsError,
    MethodFieldMismatchError,
    ParameterRangeError,
    ZeroFormError,
)
from bh_lab.domain.model.bh_ratio import BhRatio
from bh_lab.domain.model.convex_weights import ConvexWeights
from bh_lab.domain.model.diagnostic_report import DiagnosticReport
from bh_lab.domain.model.exponent_node import ExponentNode
from bh_lab.domain.model.exponent_vector import ExponentVector
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.khinchine_estimate import KhinchineEstimate
from bh_lab.domain.model.multilinear_form import MultilinearForm
from bh_lab.domain.model.ordered_partition import OrderedPartition
from bh_lab.domain.model.separate_summing_report import SeparateSummingReport
from bh_lab.domain.model.sup_norm_result import SupNormMethod, SupNormResult
from bh_lab.domain.model.tensor import Tensor
from bh_lab.domain.model.unit_pattern import UnitPattern
from bh_lab.domain.model.vector_family import VectorFamily
from bh_lab.engine.services.constants_service import ConstantsService
from bh_lab.engine.services.interpolation_service import InterpolationService
from bh_lab.engine.services.mixed_norm_service import MixedNormService
from bh_lab.engine.services.rng_service import STREAM_ASCENT, STREAM_FAMILIES, STREAM_KHINCHINE, RngService

logger = logging.getLogger(__name__)


def _sign_rows(indices: np.ndarray, width: int) -> np.ndarray:
    """Rows of +-1 for pattern indices; column 0 is fixed to +1, the rest read the bits."""
    bits = (indices[:, None] >> np.arange(width - 1, dtype=np.int64)) & 1
    signs = 1.0 - 2.0 * bits.astype(np.float64)
    return np.hstack([np.ones((indices.size, 1)), signs])


def _contract_except(a: np.ndarray, xs: Sequence[np.ndarray], k: int) -> np.ndarray:
    res = np.moveaxis(a, k, 0)
    for j in range(len(xs) - 1, -1, -1):
        if j != k:
            res = res @ xs[j]
    return res


class FormsService:
    """Multilinear forms on finite sections of c0.

    Exact (real) and heuristic sup norms, the weak l1 norm of vector
    families, Bohnenblust-Hille ratios, lower bounds for multiple summing
    norms, Khinchine ratio estimates and the block-exponent diagnostic.
    """

    def __init__(
        self,
        constants: Optional[ConstantsService] = None,
        norms: Optional[MixedNormService] = None,
        interpolation: Optional[InterpolationService] = None,
        settings=None,
    ):
        self.settings = settings or SETTINGS
        self.constants = constants or ConstantsService(self.settings)
        self.norms = norms or MixedNormService()
        self.interpolation = interpolation or InterpolationService(self.norms, self.settings)

    # ---------- evaluation ----------
    def evaluate(self, U: MultilinearForm, args: Sequence[Any]) -> complex | float:
        """U(x^1, ..., x^m) = sum_i a_i x^1_{i_1} ... x^m_{i_m}."""
        if len(args) != U.order:
            raise DimensionMismatchError(f"Form of order {U.order} got {len(args)} arguments")
        xs = [np.asarray(x).reshape(-1) for x in args]
        for k, (x, n) in enumerate(zip(xs, U.dims)):
            if x.size != n:
                raise DimensionMismatchError(f"Argument {k + 1} has length {x.size}, expected {n}")
        res = U.array
        for x in reversed(xs):
            res = res @ x
        value = complex(res)
        if value.imag == 0.0 and not np.iscomplexobj(res):
            return value.real
        return value

    # ---------- sup norm ----------
    def exact_patterns(self, U: MultilinearForm) -> int:
        """Sign patterns the exact real sup norm enumerates (one slot is solved in closed form)."""
        free = sum(U.dims[:-1])
        return 1 if free == 0 else 2 ** (free - 1)

    def exact_feasible(self, U: MultilinearForm, budget: Optional[int] = None) -> bool:
        budget = self.settings.norms.max_sign_patterns if budget is None else int(budget)
        return U.field is FieldTag.REAL and self.exact_patterns(U) <= budget

    def sup_norm(
        self,
        U: MultilinearForm,
        method: "SupNormMethod | str | None" = None,
        budget: Optional[int] = None,
        seed: Optional[int] = None,
        restarts: Optional[int] = None,
    ) -> SupNormResult:
        """||U|| = sup |U(x^1, ..., x^m)| over the unit balls of l_inf^{n_k}.

        ExactSigns (real only) enumerates sign vectors, which is exact because
        the form is affine in each coordinate. AlternatingAscent returns a
        lower bound with its maximizing arguments. Without ``method`` the
        exact method is used whenever it applies and fits the budget.
        """
        if method is None:
            method = SupNormMethod.EXACT_SIGNS if self.exact_feasible(U, budget) else SupNormMethod.ALTERNATING_ASCENT
        method = SupNormMethod(method)
        if method is SupNormMethod.EXACT_SIGNS:
            return self._sup_exact(U, budget)
        return self._sup_ascent(U, seed, restarts)

    def _sup_exact(self, U: MultilinearForm, budget: Optional[int]) -> SupNormResult:
        if U.field is not FieldTag.REAL:
            raise MethodFieldMismatchError("ExactSigns applies to real forms only")
        budget = self.settings.norms.max_sign_patterns if budget is None else int(budget)
        patterns = self.exact_patterns(U)
        if patterns > budget:
            raise BudgetExceededError(f"{patterns} sign patterns exceed the budget of {budget}")
        a = np.asarray(U.array, dtype=np.float64)
        if U.order == 1:
            return SupNormResult(float(np.abs(a).sum()), (UnitPattern.signs_of(a),), SupNormMethod.EXACT_SIGNS, True)
        head = U.dims[:-1]
        matrix = a.reshape(-1, U.dims[-1])
        width = sum(head)
        chunk = self.settings.norms.sign_chunk
        best_value, best_index = -1.0, 0
        for start in range(0, patterns, chunk):
            idx = np.arange(start, min(start + chunk, patterns), dtype=np.int64)
            signs = _sign_rows(idx, width)
            weights = signs[:, : head[0]]
            offset = head[0]
            for n in head[1:]:
                block = signs[:, offset: offset + n]
                weights = (weights[:, :, None] * block[:, None, :]).reshape(idx.size, -1)
                offset += n
            values = np.abs(weights @ matrix).sum(axis=1)
            i = int(np.argmax(values))
            if values[i] > best_value:
                best_value, best_index = float(values[i]), int(idx[i])
        signs = _sign_rows(np.array([best_index], dtype=np.int64), width)[0]
        certificate, offset = [], 0
        for n in head:
            certificate.append(UnitPattern(signs[offset: offset + n]))
            offset += n
        last = _contract_except(a, [c.values for c in certificate] + [np.ones(U.dims[-1])], U.order - 1)
        certificate.append(UnitPattern.signs_of(last))
        return SupNormResult(best_value, tuple(certificate), SupNormMethod.EXACT_SIGNS, True)

    def _sup_ascent(self, U: MultilinearForm, seed: Optional[int], restarts: Optional[int]) -> SupNormResult:
        cfg = self.settings.norms
        restarts = cfg.ascent_restarts if restarts is None else int(restarts)
        rng = RngService.make(cfg.ascent_seed if seed is None else seed, STREAM_ASCENT, 0)
        complex_field = U.field is FieldTag.COMPLEX
        a = U.array.astype(np.complex128 if complex_field else np.float64)
        update = UnitPattern.conjugate_phases_of if complex_field else UnitPattern.signs_of
        best_value, best_args = -1.0, None
        for attempt in range(max(1, restarts)):
            if attempt == 0:
                xs = [np.ones(n, dtype=a.dtype) for n in U.dims]
            elif complex_field:
                xs = [np.exp(2j * np.pi * rng.random(n)) for n in U.dims]
            else:
                xs = [rng.choice([-1.0, 1.0], size=n) for n in U.dims]
            value = -1.0
            for _ in range(cfg.ascent_cycles):
                for k in range(U.order):
                    g = _contract_except(a, xs, k)
                    xs[k] = update(g).values.astype(a.dtype)
                current = float(abs(_contract_except(a, xs, U.order - 1) @ xs[-1]))
                improved = current - value
                value = max(value, current)
                if improved < cfg.ascent_improvement:
                    break
            if value > best_value:
                best_value, best_args = value, [x.copy() for x in xs]
        certificate = tuple(UnitPattern(x) for x in best_args)
        return SupNormResult(best_value, certificate, SupNormMethod.ALTERNATING_ASCENT, False)

    @staticmethod
    def coarse_upper_norm(U: MultilinearForm) -> float:
        """sum |a_i|, an upper bound for ||U|| over either field."""
        return float(np.abs(U.array).sum())

    # ---------- weak l1 ----------
    @staticmethod
    def weak_l1_norm(fam: VectorFamily, field: "FieldTag | str | None" = None) -> float:
        """max_j sum_i |x_i(j)|: the weak l1 norm of a family in c0.

        Raises:
            ParameterRangeError: for an empty family.
            MethodFieldMismatchError: when ``field`` is real and an entry has a
                nonzero imaginary part.
        """
        if fam.is_empty():
            raise ParameterRangeError("Weak l1 norm of an empty family is undefined")
        if field is not None and FieldTag.parse(field) is FieldTag.REAL and np.any(np.imag(fam.vectors)):
            raise MethodFieldMismatchError("A real family must not have complex entries")
        return float(np.abs(fam.vectors).sum(axis=0).max())

    def normalize_family(self, fam: VectorFamily, field: "FieldTag | str | None" = None) -> VectorFamily:
        w = self.weak_l1_norm(fam, field)
        return fam if w == 0.0 else VectorFamily(fam.vectors / w)

    # ---------- Bohnenblust-Hille ratio ----------
    def bh_lhs(self, U: MultilinearForm, t: float) -> float:
        return self.norms.flat_norm(U.array, self.constants.bh_exponent(U.order, t))

    def bh_ratio(self, U: MultilinearForm, t: float, seed: Optional[int] = None) -> BhRatio:
        """Coefficient power sum at 2tm/(2+(m-1)t) over ||U||, against C_{m,t}.

        "violated" is only reported when ||U|| is exact; a ratio above the
        bound with an ascent norm (a lower bound) is "inconclusive".

        Raises:
            ZeroFormError: for the zero form.
        """
        if U.coefficients.is_zero():
            raise ZeroFormError("The ratio is undefined for the zero form")
        lhs = self.bh_lhs(U, t)
        result = self.sup_norm(U, seed=seed)
        bound = self.constants.c_constant_closed(U.order, t, U.field)
        ratio = lhs / result.value
        if ratio <= bound * (1.0 + self.settings.tolerance.bh_ratio_rel):
            verdict = "holds"
        else:
            verdict = "violated" if result.exact else "inconclusive"
        return BhRatio(lhs=lhs, norm=result.value, ratio=ratio, bound=bound, norm_exact=result.exact, verdict=verdict)

    # ---------- summing search ----------
    def value_array(self, U: MultilinearForm, families: Sequence[VectorFamily]) -> np.ndarray:
        """Array of U(x_{i_1}^(1), ..., x_{i_m}^(m)) indexed by (i_1, ..., i_m)."""
        if len(families) != U.order:
            raise DimensionMismatchError(f"Form of order {U.order} got {len(families)} families")
        res = U.array
        for k, fam in enumerate(families):
            if fam.dim != U.dims[k]:
                raise DimensionMismatchError(f"Family {k + 1} has dimension {fam.dim}, expected {U.dims[k]}")
            res = np.tensordot(res, fam.vectors, axes=([0], [1]))
        return res

    def summing_value(self, U: MultilinearForm, r: float, families: Sequence[VectorFamily]) -> float:
        return self.norms.flat_norm(self.value_array(U, families), r)

    def random_families(self, U: MultilinearForm, size: int, rng: np.random.Generator, kind: int) -> list[VectorFamily]:
        """Weak-normalized families, one per slot.

        kind 0: Gaussian matrices; kind 1: one Gaussian vector repeated;
        kind 2: Fourier phases (complex) or random signs (real), scaled by 1/size.
        """
        complex_field = U.field is FieldTag.COMPLEX
        families = []
        for d in U.dims:
            if kind == 1:
                base = rng.standard_normal(d) + (1j * rng.standard_normal(d) if complex_field else 0.0)
                mat = np.tile(base, (size, 1))
            elif kind == 2:
                if complex_field:
                    i, j = np.meshgrid(np.arange(size), np.arange(d), indexing="ij")
                    mat = np.exp(2j * np.pi * i * (j + rng.integers(0, size)) / size)
                else:
                    mat = rng.choice([-1.0, 1.0], size=(size, d))
            else:
                mat = rng.standard_normal((size, d))
                if complex_field:
                    mat = mat + 1j * rng.standard_normal((size, d))
            families.append(self.normalize_family(VectorFamily(mat), U.field))
        return families

    def summing_search(
        self, U: MultilinearForm, r: float, trials: int, N: int, seed: int,
    ) -> tuple[float, list[VectorFamily]]:
        """Best summing value over the basis family and ``trials`` random weak-normalized families."""
        r = float(r)
        if not math.isfinite(r) or r < 1.0:
            raise ExponentRangeError(f"Summing exponent must be >= 1, got {r}")
        if int(N) < 1 or int(trials) < 0:
            raise ParameterRangeError(f"Need N >= 1 and trials >= 0, got N={N}, trials={trials}")
        best_fams = [VectorFamily.basis(d) for d in U.dims]
        best = self.summing_value(U, r, best_fams)
        for trial in range(int(trials)):
            rng = RngService.make(seed, STREAM_FAMILIES, trial)
            fams = self.random_families(U, int(N), rng, trial % 3)
            value = self.summing_value(U, r, fams)
            if value > best:
                best, best_fams = value, fams
        return best, best_fams

    def summing_lower_bound(self, U: MultilinearForm, r: float, trials: int, N: int, seed: int) -> float:
        """Certified lower bound for the multiple (r,1)-summing norm of U."""
        return self.summing_search(U, r, trials, N, seed)[0]

    # ---------- Khinchine ----------
    def _khinchine_input(self, x: Any, p: float) -> np.ndarray:
        x = np.asarray(x).reshape(-1)
        if x.size == 0 or not np.any(x):
            raise ParameterRangeError("Khinchine ratio needs a nonzero vector")
        if not (1.0 <= float(p) <= 2.0):
            raise ExponentRangeError(f"Khinchine ratio needs 1 <= p <= 2, got {p}")
        return x

    def khinchine_mc(self, x: Any, p: float, field: "FieldTag | str", samples: int, seed: int) -> KhinchineEstimate:
        """Monte Carlo ||x||_2 / (E|sum eps_k x_k|^p)^(1/p) with Rademacher or Steinhaus eps.

        The verdict is "holds" when the ratio stays below
        khinchine(p) * (1 + sigmas * relative standard error).
        """
        x = self._khinchine_input(x, p)
        p, field = float(p), FieldTag.parse(field)
        cfg = self.settings.khinchine
        samples = int(samples)
        if samples < cfg.mc_min_samples:
            raise ParameterRangeError(f"Need at least {cfg.mc_min_samples} samples, got {samples}")
        rng = RngService.make(seed, STREAM_KHINCHINE, 0)
        total, total_sq, done = 0.0, 0.0, 0
        while done < samples:
            size = min(cfg.mc_batch, samples - done)
            if field is FieldTag.COMPLEX:
                eps = np.exp(2j * np.pi * rng.random((size, x.size)))
            else:
                eps = 1.0 - 2.0 * rng.integers(0, 2, size=(size, x.size))
            vals = np.abs(eps @ x) ** p
            total += float(vals.sum())
            total_sq += float((vals * vals).sum())
            done += size
        mean = total / samples
        var = max(total_sq / samples - mean * mean, 0.0)
        rel_err = math.sqrt(var / samples) / (p * mean)
        ratio = float(np.linalg.norm(x)) / mean ** (1.0 / p)
        bound = self.constants.khinchine(p, field)
        verdict = "holds" if ratio <= bound * (1.0 + cfg.mc_sigmas * rel_err) else "inconclusive"
        return KhinchineEstimate(ratio=ratio, bound=bound, stderr=ratio * rel_err, samples=samples,
                                 exact=False, verdict=verdict)

    def khinchine_exact_small(self, x: Any, p: float, field: "FieldTag | str") -> KhinchineEstimate:
        """Ratio by exhaustive sign enumeration (real) or roots-of-unity quadrature (complex).

        One sign or phase is fixed by symmetry, so the real case visits
        2^(n-1) patterns and the complex case K^(n-1) grid points.
        """
        x = self._khinchine_input(x, p)
        p, field = float(p), FieldTag.parse(field)
        cfg = self.settings.khinchine
        n = x.size
        bound = self.constants.khinchine(p, field)
        chunk = self.settings.norms.sign_chunk
        if field is FieldTag.REAL:
            if n > cfg.exact_real_max_n:
                raise BudgetExceededError(f"Exact real enumeration handles n <= {cfg.exact_real_max_n}, got {n}")
            x = np.real(x).astype(np.float64)
            count = 2 ** (n - 1)
            total = 0.0
            for start in range(0, count, chunk):
                idx = np.arange(start, min(start + chunk, count), dtype=np.int64)
                total += float((np.abs(_sign_rows(idx, n) @ x) ** p).sum())
            ratio = float(np.linalg.norm(x)) / (total / count) ** (1.0 / p)
            ok = ratio <= bound + self.settings.tolerance.khinchine_exact_abs
            return KhinchineEstimate(ratio=ratio, bound=bound, stderr=0.0, samples=count,
                                     exact=True, verdict="holds" if ok else "violated")
        if n > cfg.exact_complex_max_n:
            raise BudgetExceededError(f"Complex quadrature handles n <= {cfg.exact_complex_max_n}, got {n}")
        x = x.astype(np.complex128)
        K = cfg.quadrature_roots
        count = K ** (n - 1)
        powers = K ** np.arange(n - 1, dtype=np.int64)
        total = 0.0
        for start in range(0, count, chunk):
            idx = np.arange(start, min(start + chunk, count), dtype=np.int64)
            digits = (idx[:, None] // powers) % K
            phases = np.exp(2j * np.pi * digits / K)
            total += float((np.abs(x[0] + phases @ x[1:]) ** p).sum())
        ratio = float(np.linalg.norm(x)) / (total / count) ** (1.0 / p)
        ok = ratio <= bound + self.settings.tolerance.khinchine_exact_abs
        return KhinchineEstimate(ratio=ratio, bound=bound, stderr=0.0, samples=count,
                                 exact=False, verdict="holds" if ok else "inconclusive")

    # ---------- block-exponent diagnostic ----------
    def dps_mixed_diagnostic(
        self,
        U: MultilinearForm,
        part: OrderedPartition,
        r_list: Sequence[float],
        t: float,
        trials: Optional[int] = None,
        seed: int = 0,
    ) -> DiagnosticReport:
        """One-sided check of the scalar multiple-exponent summing estimate.

        Blocks C_1, ..., C_n with summing exponents r_k (r_k >= the BH
        exponent of |C_k|) give weights theta = f_n and block exponents
        omega_n. The left side is the largest block mixed norm of the value
        array over weak-normalized families (basis family first); the right
        side is ||U|| * prod_k (A_{r_k}^{m - |C_k|} C_{|C_k|,t})^theta_k, with
        the coarse bound sum |a_i| standing in for ||U|| when no exact norm is
        available. The verdict is never "violated".
        """
        part.validate_for(U.order)
        r_list = [float(r) for r in r_list]
        n = len(part.blocks)
        if n < 2:
            raise ParameterRangeError("The diagnostic needs at least two blocks")
        if len(r_list) != n:
            raise ParameterRangeError(f"Expected {n} summing exponents, got {len(r_list)}")
        sizes = part.block_sizes()
        for r, size in zip(r_list, sizes):
            floor = self.constants.bh_exponent(size, t)
            if not (floor - 1e-12 <= r < 2.0):
                raise ExponentRangeError(
                    f"Block of size {size} needs {floor:.6g} <= r < 2 at t={t}, got r={r}"
                )
        theta = self.constants.f_n(r_list, 2.0)
        exponents = self.constants.interpolated_exponents(r_list, 2.0)
        self._confirm_weights(r_list, theta, exponents)

        part_q = OrderedPartition(part.blocks, tuple(exponents))
        lhs_basis = self.norms.block_mixed_norm(U.array, part_q)
        lhs = lhs_basis
        trials = self.settings.campaign.family_trials if trials is None else int(trials)
        size = self.settings.campaign.family_size
        for trial in range(trials):
            fams = self.random_families(U, size, RngService.make(seed, STREAM_FAMILIES, trial), trial % 3)
            lhs = max(lhs, self.norms.block_mixed_norm(self.value_array(U, fams), part_q))

        if self.exact_feasible(U):
            norm, norm_exact = self.sup_norm(U, SupNormMethod.EXACT_SIGNS).value, True
        else:
            norm, norm_exact = self.coarse_upper_norm(U), False
        log_factor = 0.0
        for th, r, size in zip(theta, r_list, sizes):
            log_a = self.constants.log_khinchine(r, U.field)
            log_c = math.log(self.constants.c_constant_closed(size, t, U.field))
            log_factor += th * ((U.order - size) * log_a + log_c)
        rhs = norm * math.exp(log_factor)
        verdict = "holds" if lhs <= rhs * (1.0 + self.settings.tolerance.inequality_rel) else "inconclusive"
        return DiagnosticReport(
            blocks=part.to_one_based(),
            r_list=tuple(r_list),
            theta=tuple(theta),
            exponents=tuple(exponents),
            lhs=lhs,
            lhs_basis=lhs_basis,
            rhs=rhs,
            norm=norm,
            norm_exact=norm_exact,
            verdict=verdict,
        )

    def _confirm_weights(self, r_list: Sequence[float], theta: Sequence[float], exponents: Sequence[float]) -> None:
        n = len(r_list)
        nodes = [
            ExponentNode(ExponentVector(tuple(r_list[k] if j == k else 2.0 for j in range(n))))
            for k in range(n)
        ]
        found = self.interpolation.find_convex_weights(ExponentVector(tuple(exponents)), nodes)
        if not isinstance(found, ConvexWeights):
            raise InconsistentWeightsError("Block exponents are not in the hull of the block nodes")
        gap = max(abs(a - b) for a, b in zip(found.theta, theta))
        if gap > self.settings.tolerance.weights:
            raise InconsistentWeightsError(f"Interpolation weights differ from f_n by {gap:.3e}")

    # ---------- N-separately summing diagnostic ----------
    def subset_operator_bound(self, U: MultilinearForm, subset: Sequence[int]) -> tuple[float, bool]:
        """Upper bound for ||U^S|| as a map into the (r,1)-summing n-linear forms on the S slots.

        On sections of c0 an n-linear form with coefficients b is
        (1,1)-summing with norm at most sum |b_j|, and (1,1) dominates (r,1).
        So ||U^S|| is at most the sup, over the other slots' unit balls, of
        the l1 norm in the S indices: the sup norm of U with the S slots
        merged into one last slot. Returns (bound, exact).
        """
        subset = tuple(sorted({int(k) for k in subset}))
        if not subset or len(subset) >= U.order or subset[0] < 0 or subset[-1] >= U.order:
            raise ParameterRangeError(f"Need a proper nonempty subset of the {U.order} slots, got {subset}")
        rest = tuple(k for k in range(U.order) if k not in subset)
        merged = np.transpose(U.array, rest + subset).reshape([U.dims[k] for k in rest] + [-1])
        W = MultilinearForm(Tensor.from_array(merged), U.field)
        if self.exact_feasible(W):
            return self._sup_exact(W, None).value, True
        return self.coarse_upper_norm(W), False

    def separate_summing_diagnostic(
        self,
        U: MultilinearForm,
        n: int,
        r: float,
        trials: Optional[int] = None,
        seed: int = 0,
    ) -> SeparateSummingReport:
        """One-sided check of the scalar N-separately summing estimate at N = m.

        pi_(r_m,1)(U) <= A_r^(m-n) * prod over n-subsets S of ||U^S||^(1/binom(m,n)),
        with r_m = 2rm / (2n + (m-n)r). The left side is searched from below
        (basis families first), each ||U^S|| is replaced by the upper bound
        of ``subset_operator_bound``. The verdict is never "violated".
        """
        m, n, r = U.order, int(n), float(r)
        if not (1 <= n < m):
            raise ParameterRangeError(f"Need 1 <= n < m, got n={n}, m={m}")
        exponent = self.constants.r_N_exponent(n, m, 2.0, r)
        subsets = list(combinations(range(m), n))
        bounds = [self.subset_operator_bound(U, s) for s in subsets]
        constant = math.exp((m - n) * self.constants.log_khinchine(r, U.field))
        rhs = constant * math.prod(value ** (1.0 / len(subsets)) for value, _ in bounds)

        trials = self.settings.campaign.family_trials if trials is None else int(trials)
        lhs = self.summing_search(U, exponent, trials, self.settings.campaign.family_size, seed)[0]
        verdict = "holds" if lhs <= rhs * (1.0 + self.settings.tolerance.inequality_rel) else "inconclusive"
        logger.debug("separate summing n=%d r=%r: lhs=%r rhs=%r", n, r, lhs, rhs)
        return SeparateSummingReport(
            n=n,
            r=r,
            exponent=exponent,
            subsets=tuple("{" + ",".join(str(k + 1) for k in s) + "}" for s in subsets),
            subset_norms=tuple(value for value, _ in bounds),
            subset_exact=tuple(exact for _, exact in bounds),
            constant=constant,
            lhs=lhs,
            rhs=rhs,
            verdict=verdict,
        )
