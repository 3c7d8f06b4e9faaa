"""Repository for accessing and querying the verification campaign catalog.

This repository provides a clean, read-only interface to the CHECKS domain
constant, encapsulating all lookup logic for campaigns.
"""
from typing import List, Optional

from bh_lab.domain.checks import CHECKS
from bh_lab.domain.model.check_spec import CheckSpec


class ChecksRepository:
    """Repository for querying verification campaigns.

    Examples:
        >>> repo = ChecksRepository()
        >>> repo.get_by_name("bh").hard
        True
        >>> "dps" in repo.names()
        True
    """

    def __init__(self, checks: Optional[List[CheckSpec]] = None):
        """Initialize repository with the campaign catalog.

        Args:
            checks: Optional custom catalog. Defaults to the CHECKS constant.
        """
        self._checks = checks if checks is not None else CHECKS

    def get_all(self) -> List[CheckSpec]:
        return list(self._checks)

    def get_by_name(self, name: str) -> Optional[CheckSpec]:
        """Find a campaign by exact name match, or None."""
        for spec in self._checks:
            if spec.name == name:
                return spec
        return None

    def names(self) -> List[str]:
        return [spec.name for spec in self._checks]

    def get_hard(self) -> List[CheckSpec]:
        """Campaigns whose failures are counterexamples (exit code 2)."""
        return [spec for spec in self._checks if spec.hard]

    def get_one_sided(self) -> List[CheckSpec]:
        return [spec for spec in self._checks if not spec.hard]
