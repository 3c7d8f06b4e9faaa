from __future__ import annotations

import numpy as np

from bh_lab.config import SETTINGS

# Stream ids keep the generators of different concerns apart for one seed
STREAM_TRIALS = 0
STREAM_FAMILIES = 1
STREAM_ASCENT = 2
STREAM_KHINCHINE = 3


class RngService:
    """Counter-based random streams keyed by (seed, stream, trial).

    Every trial gets its own ``Generator(Philox)`` derived from
    ``SeedSequence(seed, spawn_key=(stream, trial))``, so results do not
    depend on the order in which trials run.

    Examples:
        >>> rng = RngService(7).generator(0, 3)
        >>> float(rng.random()) == float(RngService(7).generator(0, 3).random())
        True
    """

    def __init__(self, seed: int | None = None):
        self.seed = int(SETTINGS.campaign.default_seed if seed is None else seed)
        if self.seed < 0:
            raise ValueError(f"Seed must be non-negative, got {self.seed}")

    @staticmethod
    def make(seed: int, stream: int = 0, trial: int = 0) -> np.random.Generator:
        ss = np.random.SeedSequence(int(seed), spawn_key=(int(stream), int(trial)))
        return np.random.Generator(np.random.Philox(ss))

    def generator(self, stream: int = 0, trial: int = 0) -> np.random.Generator:
        return self.make(self.seed, stream, trial)

    def trial(self, index: int) -> np.random.Generator:
        return self.generator(STREAM_TRIALS, index)
