from __future__ import annotations

from enum import Enum


class RecursionMode(str, Enum):
    """How omega_n and f_n are evaluated: by the pairwise recursion or the closed form."""

    RECURSIVE = "recursive"
    CLOSED = "closed"
