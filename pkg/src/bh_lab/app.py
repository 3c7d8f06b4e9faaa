"""
bh-lab command-line front end.

Commands:

- ``constants``          C_{m,t} table (recursive and closed forms) over m/t grids
- ``verify <check>``     seeded verification campaign; exit 2 on a hard violation
- ``checks``             catalog of the verification campaigns
- ``norm``               mixed or block mixed norm of a tensor file
- ``compare-exponents``  old vs new summing exponents over an (n, N, q, r) grid
- ``kappa``              empirical asymptotic envelope of C_{m,t}
- ``replay``             re-evaluate the witness stored in a report or witness file

Data (CSV, JSON, values) goes to stdout or ``--out``; summaries and log
records go to stderr through rich.
"""

from __future__ import annotations

import argparse
import logging
import re
from fractions import Fraction
from typing import Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

import bh_lab
from bh_lab.domain.errors import LabError
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.fuzz_report import FuzzReport
from bh_lab.domain.model.run_config import RunConfig
from bh_lab.engine.toolkit import LabToolkit

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class UsageError(ValueError):
    """Raised instead of argparse's own exit, so bad usage maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


# ---------- value parsers ----------
def parse_number(text: str) -> float:
    """Exact rational or decimal, converted to float last: "4/3" -> 1.3333333333333333."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"Not a number: {text!r}") from None


def parse_number_list(text: str) -> list[float]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError("Empty number list")
    return [parse_number(s) for s in items]


def parse_int_list(text: str) -> list[int]:
    """Comma list of integers and inclusive ranges: "1..4,8" -> [1, 2, 3, 4, 8]."""
    values: list[int] = []
    for item in (s for s in text.split(",") if s.strip()):
        match = _RANGE.match(item)
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
            if hi < lo:
                raise UsageError(f"Empty range: {item!r}")
            values.extend(range(lo, hi + 1))
            continue
        try:
            values.append(int(item))
        except ValueError:
            raise UsageError(f"Not an integer: {item!r}") from None
    if not values:
        raise UsageError("Empty integer list")
    return values


def _single(values: Optional[list], name: str):
    if values is None:
        return None
    if len(values) != 1:
        raise UsageError(f"--{name} takes a single value for this command")
    return values[0]


class LabApp:
    """Parses a command line, runs it on a LabToolkit and maps the outcome to an exit code."""

    def __init__(self, toolkit: Optional[LabToolkit] = None, stdout=None, stderr=None):
        self.toolkit = toolkit or LabToolkit()
        self.settings = self.toolkit.settings
        self.stdout = stdout
        self.console = Console(file=stderr, stderr=stderr is None)

    # ---------- parser ----------
    def build_parser(self) -> argparse.ArgumentParser:
        common = _Parser(add_help=False)
        common.add_argument("--seed", type=int, default=self.settings.campaign.default_seed)
        common.add_argument("--trials", type=int, default=self.settings.campaign.default_trials)
        common.add_argument("--tol", type=parse_number, default=None)
        common.add_argument("--field", choices=[f.value for f in FieldTag], default=None)
        common.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")
        common.add_argument("--out", dest="out_path", default=None)
        common.add_argument("--verbose", "-v", action="store_true")

        parser = _Parser(prog="bh-lab", description="Mixed norms, Bohnenblust-Hille constants and inequality checks.")
        parser.add_argument("--version", action="version", version=f"bh-lab {bh_lab.__version__}")
        sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

        p = sub.add_parser("constants", parents=[common], help="C_{m,t} table")
        p.add_argument("--m", type=parse_int_list, default=parse_int_list("1..8"))
        p.add_argument("--t", type=parse_number_list, default=[1.0])

        catalog = self.toolkit.checks_repo
        p = sub.add_parser(
            "verify",
            parents=[common],
            help="verification campaign",
            epilog=self._catalog_epilog(),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        p.add_argument("check", choices=catalog.names(), metavar="check")
        p.add_argument("--m", type=parse_int_list, default=None)
        p.add_argument("--t", type=parse_number_list, default=None)
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--witness", dest="witness_path", default=None)

        sub.add_parser("checks", parents=[common], help="list the verification campaigns")

        p = sub.add_parser("norm", parents=[common], help="mixed norm of a tensor file")
        p.add_argument("--input", dest="input_path", required=True)
        p.add_argument("--p", type=parse_number_list, required=True)
        p.add_argument("--blocks", default=None)

        p = sub.add_parser("compare-exponents", parents=[common], help="old vs new summing exponents")
        p.add_argument("--n", type=parse_int_list, required=True)
        p.add_argument("--N", type=parse_int_list, required=True)
        p.add_argument("--q", type=parse_number_list, default=[2.0])
        p.add_argument("--r", type=parse_number_list, default=[1.0])

        p = sub.add_parser("kappa", parents=[common], help="asymptotic envelope of C_{m,t}")
        p.add_argument("--t", type=parse_number_list, default=[1.0, 1.5])
        p.add_argument("--m-max", dest="m_max", type=int, default=10_000)

        p = sub.add_parser("replay", parents=[common], help="re-evaluate a stored witness")
        p.add_argument("--input", dest="input_path", required=True)
        return parser

    def parse_config(self, argv: Optional[Sequence[str]]) -> tuple[RunConfig, argparse.Namespace]:
        ns = self.build_parser().parse_args(argv)
        config = RunConfig(
            command=ns.command,
            check=getattr(ns, "check", None),
            field=FieldTag.parse(ns.field) if ns.field else None,
            m_values=getattr(ns, "m", None) or [],
            t_values=getattr(ns, "t", None) or [],
            q_values=getattr(ns, "q", []),
            r_values=getattr(ns, "r", []),
            n_values=getattr(ns, "n", []),
            N_values=getattr(ns, "N", []),
            dim=getattr(ns, "dim", None),
            trials=ns.trials,
            seed=ns.seed,
            tol=ns.tol,
            exponents=getattr(ns, "p", None) or [],
            blocks=getattr(ns, "blocks", None),
            input_path=getattr(ns, "input_path", None),
            out_path=ns.out_path,
            witness_path=getattr(ns, "witness_path", None),
            output_format=ns.output_format,
            verbose=ns.verbose,
        )
        return config, ns

    # ---------- entry ----------
    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        try:
            config, ns = self.parse_config(argv)
        except SystemExit as exc:  # --help / --version
            return int(exc.code or 0)
        except UsageError as exc:
            self.console.print(f"[red]error:[/red] {exc}", highlight=False)
            return EXIT_INVALID
        self._configure_logging(config.verbose)
        handler = getattr(self, f"cmd_{config.command.replace('-', '_')}")
        try:
            return handler(config, ns)
        except (LabError, ValueError) as exc:
            self.console.print(f"[red]error:[/red] {exc}", highlight=False)
            return EXIT_INVALID
        except OSError as exc:
            self.console.print(f"[red]error:[/red] {exc.strerror or exc}: {exc.filename}", highlight=False)
            return EXIT_INVALID

    def _configure_logging(self, verbose: bool) -> None:
        root = logging.getLogger("bh_lab")
        for h in list(root.handlers):
            if isinstance(h, RichHandler):
                root.removeHandler(h)
        handler = RichHandler(console=self.console, show_time=False, show_path=False)
        root.addHandler(handler)
        root.setLevel(logging.DEBUG if verbose else getattr(logging, self.settings.log.console_level, logging.WARNING))

    def _emit(self, config: RunConfig, text: str) -> None:
        if config.out_path:
            path = self.toolkit.reports.write_text(config.out_path, text)
            logger.info("wrote %s", path)
            return
        if self.stdout is not None:
            self.stdout.write(text)
        else:
            print(text, end="")

    def _fields(self, config: RunConfig) -> list[FieldTag]:
        return [config.field] if config.field is not None else [FieldTag.REAL, FieldTag.COMPLEX]

    # ---------- commands ----------
    def cmd_constants(self, config: RunConfig, ns: argparse.Namespace) -> int:
        reports = self.toolkit.reports
        report = self.toolkit.constants_table(config.m_values, config.t_values, self._fields(config))
        text = reports.constants_json(report) if config.output_format == "json" else reports.constants_csv(report)
        self._emit(config, text)
        logger.info("%d constant rows", len(report))
        return EXIT_OK

    def cmd_verify(self, config: RunConfig, ns: argparse.Namespace) -> int:
        spec = self.toolkit.checks_repo.get_by_name(config.check)
        if config.field is not None and not spec.uses_field:
            raise UsageError(f"--field does not apply to {spec.name} ({spec.title})")
        report = self.toolkit.verify(
            config.check,
            trials=config.trials,
            seed=config.seed,
            field=config.field,
            m=_single(config.m_values or None, "m"),
            t=_single(config.t_values or None, "t"),
            dim=config.dim,
            tol=config.tol,
        )
        reports = self.toolkit.reports
        text = reports.fuzz_json(report) if config.output_format == "json" else reports.fuzz_csv(report)
        self._emit(config, text)

        witness_file = None
        if report.witness is not None and (report.hard_violation or config.witness_path):
            witness_file = config.witness_path or reports.witness_path(config.out_path, report.check)
            reports.write_text(witness_file, reports.to_json(report.witness))
        self._print_summary(report, witness_file, spec.title)
        return EXIT_VIOLATION if report.hard_violation else EXIT_OK

    def cmd_checks(self, config: RunConfig, ns: argparse.Namespace) -> int:
        specs = self.toolkit.checks_repo.get_all()
        reports = self.toolkit.reports
        self._emit(config, reports.checks_json(specs) if config.output_format == "json" else reports.checks_csv(specs))
        return EXIT_OK

    def cmd_norm(self, config: RunConfig, ns: argparse.Namespace) -> int:
        tensor = self.toolkit.reports.load_tensor(config.input_path)
        value = self.toolkit.norm(tensor, config.exponents, config.blocks)
        self._emit(config, self.toolkit.reports.format_float(value) + "\n")
        return EXIT_OK

    def cmd_compare_exponents(self, config: RunConfig, ns: argparse.Namespace) -> int:
        if not any(n < N for n in config.n_values for N in config.N_values):
            raise UsageError("compare-exponents needs at least one pair with n < N")
        rows = self.toolkit.compare_exponents(config.n_values, config.N_values, config.q_values, config.r_values)
        reports = self.toolkit.reports
        text = reports.comparison_json(rows) if config.output_format == "json" else reports.comparison_csv(rows)
        self._emit(config, text)
        return EXIT_OK

    def cmd_kappa(self, config: RunConfig, ns: argparse.Namespace) -> int:
        fields = [config.field] if config.field is not None else [FieldTag.COMPLEX, FieldTag.REAL]
        rows = self.toolkit.kappa(config.t_values, fields, ns.m_max)
        reports = self.toolkit.reports
        text = reports.envelope_json(rows) if config.output_format == "json" else reports.envelope_csv(rows)
        self._emit(config, text)
        return EXIT_OK

    def cmd_replay(self, config: RunConfig, ns: argparse.Namespace) -> int:
        document = self.toolkit.reports.load_json(config.input_path)
        if not isinstance(document, dict):
            raise UsageError(f"{config.input_path}: expected a JSON object")
        outcome, drift = self.toolkit.replay(document, tol=config.tol)
        payload = {**outcome.to_document(), "drift": drift}
        self._emit(config, self.toolkit.reports.to_json(payload))
        table = Table(title="replay", show_header=True)
        for column in ("lhs", "rhs", "slack", "drift", "verdict"):
            table.add_column(column)
        fmt = self.toolkit.reports.format_float
        table.add_row(fmt(outcome.lhs), fmt(outcome.rhs), fmt(outcome.slack), fmt(drift), outcome.verdict)
        self.console.print(table)
        return EXIT_VIOLATION if outcome.verdict == "violated" else EXIT_OK

    # ---------- summaries ----------
    def _catalog_epilog(self) -> str:
        lines = ["checks:"]
        for spec in self.toolkit.checks_repo.get_all():
            kind = "hard" if spec.hard else "one-sided"
            lines.append(f"  {spec.name:<14}{spec.title} ({kind})")
            lines.append(f"  {'':<14}{spec.description}")
        return "\n".join(lines)

    def _print_summary(self, report: FuzzReport, witness_file, title: str) -> None:
        fmt = self.toolkit.reports.format_float
        table = Table(title=f"verify {report.check}: {title}", show_header=True)
        for column in ("trials", "seed", "field", "worst ratio", "worst slack", "violations", "inconclusive", "verdict"):
            table.add_column(column)
        style = {"holds": "green", "inconclusive": "yellow", "violated": "red"}.get(report.verdict, "white")
        table.add_row(
            str(report.trials), str(report.seed), report.field,
            fmt(report.worst_ratio), fmt(report.worst_slack),
            str(report.violations), str(report.inconclusive),
            f"[{style}]{report.verdict}[/{style}]",
        )
        self.console.print(table)
        if witness_file is not None:
            self.console.print(f"witness: {witness_file}", highlight=False)
        shown = self.settings.report.summary_messages
        for entry in report.messages[-shown:] if shown > 0 else []:
            style = "red" if entry["level"] == "error" else "yellow"
            self.console.print(f"[{style}]{escape(entry['tag'])}[/{style}] {escape(entry['text'])}", highlight=False)
