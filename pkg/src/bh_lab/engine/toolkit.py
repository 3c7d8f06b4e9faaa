from typing import Any, Iterable, Optional, Sequence

from bh_lab.config import SETTINGS
from bh_lab.domain.model.asymptotic_envelope import AsymptoticEnvelope
from bh_lab.domain.model.constants_report import ConstantsReport
from bh_lab.domain.model.exponent_comparison import ExponentComparison
from bh_lab.domain.model.exponent_vector import ExponentVector
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import FuzzReport, TrialOutcome
from bh_lab.domain.model.ordered_partition import OrderedPartition
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.checks.context import CheckContext
from bh_lab.engine.checks.registry import build_default_registry
from bh_lab.engine.services.campaign_service import CampaignService
from bh_lab.engine.services.constants_service import ConstantsService
from bh_lab.engine.services.forms_service import FormsService
from bh_lab.engine.services.interpolation_service import InterpolationService
from bh_lab.engine.services.messenger_service import MessengerService
from bh_lab.engine.services.mixed_norm_service import MixedNormService
from bh_lab.engine.services.report_service import ReportService
from bh_lab.repositories import ChecksRepository


class LabToolkit:
    """Facade over the lab services, used by the command line and by tests."""

    def __init__(self, settings=None):
        self.settings = settings or SETTINGS

        # Catalog first (campaign metadata)
        self.checks_repo = ChecksRepository()

        # Services, bottom-up
        self.messenger = MessengerService(self.settings.log.messages_limit)
        self.norms = MixedNormService()
        self.constants = ConstantsService(self.settings)
        self.interpolation = InterpolationService(self.norms, self.settings)
        self.forms = FormsService(self.constants, self.norms, self.interpolation, self.settings)
        self.reports = ReportService(self.settings)

        # Pluggable checks and the campaign runner
        self.registry = build_default_registry()
        self.campaigns = CampaignService(self.registry)

    # ---------- contexts ----------
    def check_context(
        self,
        field: "FieldTag | str | None" = None,
        m: Optional[int] = None,
        t: Optional[float] = None,
        dim: Optional[int] = None,
        tol: Optional[float] = None,
    ) -> CheckContext:
        return CheckContext(
            norms=self.norms,
            interpolation=self.interpolation,
            constants=self.constants,
            forms=self.forms,
            messenger=self.messenger,
            field=None if field is None else FieldTag.parse(field),
            m=m,
            t=t,
            dim=dim,
            tol=self.settings.tolerance.inequality_rel if tol is None else float(tol),
            settings=self.settings,
        )

    # ---------- commands ----------
    def constants_table(
        self, m_values: Iterable[int], t_values: Iterable[float], fields: Iterable["FieldTag | str"]
    ) -> ConstantsReport:
        return self.constants.constants_report(m_values, t_values, fields)

    def verify(
        self,
        check: str,
        trials: Optional[int] = None,
        seed: Optional[int] = None,
        **context_args: Any,
    ) -> FuzzReport:
        trials = self.settings.campaign.default_trials if trials is None else trials
        seed = self.settings.campaign.default_seed if seed is None else seed
        return self.campaigns.run(check, self.check_context(**context_args), trials, seed)

    def replay(self, document: dict, tol: Optional[float] = None) -> tuple[TrialOutcome, float]:
        return self.campaigns.replay(document, self.check_context(tol=tol))

    def norm(self, tensor: Tensor, exponents: Sequence[float], blocks: Optional[str] = None) -> float:
        if blocks:
            return self.norms.block_mixed_norm(tensor, OrderedPartition.parse(blocks, exponents))
        return self.norms.mixed_norm(tensor, ExponentVector.from_iterable(exponents))

    def compare_exponents(
        self,
        n_values: Iterable[int],
        N_values: Iterable[int],
        q_values: Iterable[float],
        r_values: Iterable[float],
    ) -> list[ExponentComparison]:
        """Grid of comparisons; (n, N) pairs with n >= N are skipped."""
        rows = []
        N_values = list(N_values)
        q_values = list(q_values)
        r_values = list(r_values)
        for n in n_values:
            for N in N_values:
                if n >= N:
                    continue
                for q in q_values:
                    for r in r_values:
                        rows.append(self.constants.exponent_comparison(n, N, q, r))
        return rows

    def kappa(self, t_values: Iterable[float], fields: Iterable["FieldTag | str"], m_max: int) -> list[AsymptoticEnvelope]:
        fields = list(fields)
        return [self.constants.asymptotic_envelope(t, f, m_max) for f in fields for t in t_values]
