from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from bh_lab.domain.model.field_tag import FieldTag


@dataclass
class RunConfig:
    """Parsed command-line invocation.

    Attributes:
        command: Top-level command (constants, verify, checks, norm, compare-exponents, kappa, replay).
        check: Verification campaign name for ``verify``.
        field: Scalar field, or None for commands that iterate over both.
        m_values, t_values: Degree and t grids (constants, kappa, verify).
        q_values, r_values, n_values, N_values: Exponent comparison grids.
        dim: Dimension per slot for form campaigns.
        trials, seed, tol: Campaign controls; ``seed`` defaults to 42.
        exponents: Exponent list for ``norm`` (parsed from exact rationals).
        blocks: Block notation for ``norm``, e.g. "{2}{1}".
        input_path, out_path, witness_path: File locations.
        output_format: "csv" or "json".
    """

    command: str
    check: Optional[str] = None
    field: Optional[FieldTag] = None
    m_values: list[int] = dc_field(default_factory=list)
    t_values: list[float] = dc_field(default_factory=list)
    q_values: list[float] = dc_field(default_factory=list)
    r_values: list[float] = dc_field(default_factory=list)
    n_values: list[int] = dc_field(default_factory=list)
    N_values: list[int] = dc_field(default_factory=list)
    dim: Optional[int] = None
    trials: int = 200
    seed: int = 42
    tol: Optional[float] = None
    exponents: list[float] = dc_field(default_factory=list)
    blocks: Optional[str] = None
    input_path: Optional[str] = None
    out_path: Optional[str] = None
    witness_path: Optional[str] = None
    output_format: str = "csv"
    verbose: bool = False
