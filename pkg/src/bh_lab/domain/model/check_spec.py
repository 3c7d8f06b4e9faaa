from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckSpec:
    """Catalog entry describing a verification campaign.

    Attributes:
        name: Subcommand name used by ``verify <name>``.
        title: Short display title.
        hard: True when a failed trial is a genuine counterexample (exit code 2);
            False for one-sided checks that can only report "inconclusive".
        uses_field: Whether ``--field`` selects the scalar field of the instances.
        description: One-line summary of the inequality being exercised.
    """

    name: str
    title: str
    hard: bool
    uses_field: bool
    description: str
