from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from bh_lab.config import SETTINGS
from bh_lab.domain.errors import MalformedTensorFileError
from bh_lab.domain.model.asymptotic_envelope import AsymptoticEnvelope
from bh_lab.domain.model.check_spec import CheckSpec
from bh_lab.domain.model.constants_report import ConstantsReport
from bh_lab.domain.model.exponent_comparison import ExponentComparison
from bh_lab.domain.model.fuzz_report import FuzzReport
from bh_lab.domain.model.tensor import Tensor


class ReportService:
    """Serialization of tables and campaign reports.

    CSV cells print floats with a fixed number of significant digits
    (17 by default) and a '.' separator regardless of locale. JSON keeps
    floats as numbers in their shortest round-trip form, so witnesses
    reload bit for bit. Nothing time- or host-dependent is written.
    """

    def __init__(self, settings=None):
        self.settings = settings or SETTINGS

    # ---------- scalars ----------
    def format_float(self, x: float) -> str:
        """Positional notation with ``significant_digits`` digits, e.g. 1.6817928305074290."""
        x = float(x)
        if not math.isfinite(x):
            return str(x)
        return np.format_float_positional(
            x, precision=self.settings.report.significant_digits, unique=False, fractional=False
        )

    def _cell(self, value: Any) -> str:
        if isinstance(value, float):
            return self.format_float(value)
        if hasattr(value, "value"):
            return str(value.value)
        return str(value)

    def to_csv(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([self._cell(v) for v in row])
        return buf.getvalue()

    def to_json(self, payload: Any) -> str:
        return json.dumps(payload, indent=self.settings.report.json_indent, sort_keys=False, allow_nan=True) + "\n"

    # ---------- constants ----------
    def constants_csv(self, report: ConstantsReport) -> str:
        rows = ((r.m, r.t, r.field, r.exponent, r.c_recursive, r.c_closed) for r in report.rows)
        return self.to_csv(self.settings.report.constants_header, rows)

    def constants_json(self, report: ConstantsReport) -> str:
        records = []
        for r in report.rows:
            record = {
                "m": r.m,
                "t": r.t,
                "field": r.field.value,
                "exponent": r.exponent,
                "C_recursive": r.c_recursive,
                "C_closed": r.c_closed,
            }
            if r.c_displayed is not None:
                record["C_displayed"] = r.c_displayed
            record["improvement"] = r.improvement
            records.append(record)
        return self.to_json({"metadata": report.metadata, "rows": records})

    # ---------- exponent comparison ----------
    def comparison_csv(self, rows: Sequence[ExponentComparison]) -> str:
        return self.to_csv(
            self.settings.report.comparison_header,
            ((c.n, c.N, c.q, c.r, c.old, c.new, c.verdict) for c in rows),
        )

    def comparison_json(self, rows: Sequence[ExponentComparison]) -> str:
        return self.to_json([asdict(c) for c in rows])

    # ---------- envelope ----------
    def envelope_csv(self, rows: Sequence[AsymptoticEnvelope]) -> str:
        header = ("t", "field", "m_max", "exponent", "kappa_est", "argmax_m", "last_decade_increase")
        return self.to_csv(header, ((e.t, e.field, e.m_max, e.exponent, e.kappa_est, e.argmax_m,
                                     e.last_decade_increase) for e in rows))

    def envelope_json(self, rows: Sequence[AsymptoticEnvelope]) -> str:
        return self.to_json([{**asdict(e), "field": e.field.value, "stabilized": e.stabilized} for e in rows])

    # ---------- campaigns ----------
    def fuzz_document(self, report: FuzzReport) -> dict:
        return {
            "check": report.check,
            "seed": report.seed,
            "trials": report.trials,
            "field": report.field,
            "params": report.params,
            "worst_ratio": report.worst_ratio,
            "worst_slack": report.worst_slack,
            "verdict": report.verdict,
            "violations": report.violations,
            "inconclusive": report.inconclusive,
            "witness": report.witness,
            "messages": report.messages,
        }

    def fuzz_json(self, report: FuzzReport) -> str:
        return self.to_json(self.fuzz_document(report))

    def fuzz_csv(self, report: FuzzReport) -> str:
        header = ("check", "seed", "trials", "field", "worst_ratio", "worst_slack", "violations", "inconclusive", "verdict")
        return self.to_csv(header, [(report.check, report.seed, report.trials, report.field, report.worst_ratio,
                                     report.worst_slack, report.violations, report.inconclusive, report.verdict)])

    # ---------- check catalog ----------
    def checks_csv(self, specs: Iterable[CheckSpec]) -> str:
        rows = ((s.name, s.title, "hard" if s.hard else "one-sided", s.uses_field, s.description) for s in specs)
        return self.to_csv(("name", "title", "kind", "uses_field", "description"), rows)

    def checks_json(self, specs: Iterable[CheckSpec]) -> str:
        return self.to_json([asdict(s) for s in specs])

    # ---------- files ----------
    @staticmethod
    def write_text(path: "str | Path", text: str) -> Path:
        path = Path(path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            f.write(text)
        return path

    @staticmethod
    def load_json(path: "str | Path") -> Any:
        with Path(path).open("r", encoding="utf-8") as f:
            return json.load(f)

    def load_tensor(self, path: "str | Path") -> Tensor:
        try:
            doc = self.load_json(path)
        except json.JSONDecodeError as exc:
            raise MalformedTensorFileError(f"{path}: not valid JSON ({exc.msg})") from exc
        return Tensor.from_document(doc)

    def witness_path(self, out_path: Optional[str], check: str) -> Path:
        if out_path:
            p = Path(out_path)
            return p.with_name(p.stem + ".witness.json")
        return Path(f"{check}.witness.json")
