"""One-sided checks - failures are inconclusive, never counterexamples."""

from bh_lab.engine.checks.one_sided.dps_check import DpsCheck
from bh_lab.engine.checks.one_sided.separate_check import SeparateSummingCheck

__all__ = [
    "DpsCheck",
    "SeparateSummingCheck",
]
