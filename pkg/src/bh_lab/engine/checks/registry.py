"""Check registry for looking up verification checks by name."""

from typing import List, Optional

from bh_lab.engine.checks.base import BaseCheck, CheckKind


class CheckRegistry:
    """Registry of verification checks.

    Responsibilities:
    - Register checks by kind (hard / one-sided)
    - Look checks up by their subcommand name
    - Refuse duplicate names
    """

    def __init__(self):
        self.hard_checks: List[BaseCheck] = []
        self.one_sided_checks: List[BaseCheck] = []

    def register(self, check: BaseCheck) -> None:
        if self.get(check.name) is not None:
            raise ValueError(f"Check already registered: {check.name}")
        if check.kind == "hard":
            self.hard_checks.append(check)
        elif check.kind == "one-sided":
            self.one_sided_checks.append(check)
        else:
            raise ValueError(f"Unknown check kind: {check.kind}")

    def get(self, name: str) -> Optional[BaseCheck]:
        for check in self.get_all():
            if check.name == name:
                return check
        return None

    def require(self, name: str) -> BaseCheck:
        check = self.get(name)
        if check is None:
            raise ValueError(f"Unknown check {name!r}; available: {', '.join(self.names())}")
        return check

    def names(self) -> List[str]:
        return [c.name for c in self.get_all()]

    def get_all(self) -> List[BaseCheck]:
        return self.hard_checks + self.one_sided_checks

    def get_by_kind(self, kind: CheckKind) -> List[BaseCheck]:
        if kind == "hard":
            return self.hard_checks.copy()
        if kind == "one-sided":
            return self.one_sided_checks.copy()
        return []


def build_default_registry() -> CheckRegistry:
    """Registry with every built-in check."""
    from bh_lab.engine.checks.hard import (
        BhCheck,
        BleiCheck,
        InterpolationCheck,
        KhinchineCheck,
        MinkowskiCheck,
        SummingCheck,
    )
    from bh_lab.engine.checks.one_sided import DpsCheck, SeparateSummingCheck

    registry = CheckRegistry()
    for check in (
        MinkowskiCheck(),
        InterpolationCheck(),
        BleiCheck(),
        BhCheck(),
        KhinchineCheck(),
        SummingCheck(),
        DpsCheck(),
        SeparateSummingCheck(),
    ):
        registry.register(check)
    return registry
