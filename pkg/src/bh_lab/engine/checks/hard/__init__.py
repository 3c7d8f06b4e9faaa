"""Hard checks - a failed trial is a counterexample to a proven inequality."""

from bh_lab.engine.checks.hard.minkowski_check import MinkowskiCheck
from bh_lab.engine.checks.hard.interpolation_check import InterpolationCheck
from bh_lab.engine.checks.hard.blei_check import BleiCheck
from bh_lab.engine.checks.hard.bh_check import BhCheck
from bh_lab.engine.checks.hard.khinchine_check import KhinchineCheck
from bh_lab.engine.checks.hard.summing_check import SummingCheck

__all__ = [
    "MinkowskiCheck",
    "InterpolationCheck",
    "BleiCheck",
    "BhCheck",
    "KhinchineCheck",
    "SummingCheck",
]
