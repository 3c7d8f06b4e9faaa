"""Verification checks: one pluggable class per inequality campaign."""

from bh_lab.engine.checks.base import BaseCheck, CheckKind
from bh_lab.engine.checks.context import CheckContext

__all__ = [
    "BaseCheck",
    "CheckContext",
    "CheckKind",
]
