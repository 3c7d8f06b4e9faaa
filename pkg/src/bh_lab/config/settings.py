from __future__ import annotations

from dataclasses import dataclass
from .tolerance_settings import ToleranceSettings
from .norm_settings import NormSettings
from .interpolation_settings import InterpolationSettings
from .constants_settings import ConstantsSettings
from .khinchine_settings import KhinchineSettings
from .campaign_settings import CampaignSettings
from .report_settings import ReportSettings
from .log_settings import LogSettings


@dataclass(frozen=True)
class Settings:
    tolerance: ToleranceSettings = ToleranceSettings()
    norms: NormSettings = NormSettings()
    interpolation: InterpolationSettings = InterpolationSettings()
    constants: ConstantsSettings = ConstantsSettings()
    khinchine: KhinchineSettings = KhinchineSettings()
    campaign: CampaignSettings = CampaignSettings()
    report: ReportSettings = ReportSettings()
    log: LogSettings = LogSettings()


SETTINGS = Settings()
