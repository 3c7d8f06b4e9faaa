"""Check context dataclass carrying the services and campaign parameters."""

from dataclasses import dataclass, field as dc_field
from typing import TYPE_CHECKING, Optional

from bh_lab.config import SETTINGS
from bh_lab.domain.model.field_tag import FieldTag

if TYPE_CHECKING:
    from bh_lab.config.settings import Settings
    from bh_lab.engine.services.constants_service import ConstantsService
    from bh_lab.engine.services.forms_service import FormsService
    from bh_lab.engine.services.interpolation_service import InterpolationService
    from bh_lab.engine.services.messenger_service import MessengerService
    from bh_lab.engine.services.mixed_norm_service import MixedNormService


@dataclass
class CheckContext:
    """Context object passed to checks.

    Attributes:
        norms: Mixed-norm arithmetic.
        interpolation: Convex weights and the product bound.
        constants: Khinchine constants, exponents and C_{m,t}.
        forms: Sup norms, BH ratios, summing search, Khinchine ratios.
        messenger: Structured campaign log.
        field: Field fixed by ``--field``; None lets each trial draw one.
        m: Degree fixed by ``--m`` (BH-type checks), or None.
        t: Variant parameter fixed by ``--t``, or None.
        dim: Dimension per slot fixed by ``--dim``, or None.
        tol: Relative slack for hard assertions.
        settings: Active settings.
    """

    norms: "MixedNormService"
    interpolation: "InterpolationService"
    constants: "ConstantsService"
    forms: "FormsService"
    messenger: Optional["MessengerService"] = None
    field: Optional[FieldTag] = None
    m: Optional[int] = None
    t: Optional[float] = None
    dim: Optional[int] = None
    tol: float = SETTINGS.tolerance.inequality_rel
    settings: "Settings" = dc_field(default=SETTINGS)
