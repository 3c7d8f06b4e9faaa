from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from bh_lab.domain.errors import InvalidPartitionError


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered disjoint blocks (C_1, ..., C_n) of the tensor axes with one exponent per block.

    Blocks hold zero-based axis numbers. Block C_1 is aggregated outermost,
    C_n innermost; inside a block all axes are flattened into a single
    multi-index aggregated with one flat l_q sum.

    Attributes:
        blocks: Tuple of non-empty, pairwise disjoint tuples of axes.
        per_block_exponents: One exponent >= 1 per block, outer to inner.

    Examples:
        >>> part = OrderedPartition.parse("{2}{1}", [1, 2])
        >>> part.blocks
        ((1,), (0,))
        >>> part.covers(2)
        True
    """

    blocks: tuple[tuple[int, ...], ...]
    per_block_exponents: tuple[float, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(a) for a in block) for block in self.blocks)
        exps = tuple(float(e) for e in self.per_block_exponents)
        if not blocks:
            raise InvalidPartitionError("Partition needs at least one block")
        if len(exps) != len(blocks):
            raise InvalidPartitionError(
                f"Expected {len(blocks)} block exponents, got {len(exps)}"
            )
        seen: set[int] = set()
        for block in blocks:
            if not block:
                raise InvalidPartitionError("Blocks must be non-empty")
            for axis in block:
                if axis < 0:
                    raise InvalidPartitionError(f"Axis numbers must be non-negative, got {axis}")
                if axis in seen:
                    raise InvalidPartitionError(f"Axis {axis} appears in more than one block")
                seen.add(axis)
        for e in exps:
            if not math.isfinite(e) or e < 1.0:
                raise InvalidPartitionError(f"Block exponents must be finite and >= 1, got {e}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "per_block_exponents", exps)

    @classmethod
    def singletons(cls, exponents: Sequence[float]) -> "OrderedPartition":
        return cls(tuple((k,) for k in range(len(exponents))), tuple(exponents))

    @classmethod
    def from_one_based(cls, blocks: Sequence[Sequence[int]], exponents: Sequence[float]) -> "OrderedPartition":
        return cls(tuple(tuple(int(a) - 1 for a in b) for b in blocks), tuple(exponents))

    @classmethod
    def parse(cls, text: str, exponents: Sequence[float]) -> "OrderedPartition":
        """Parse the command-line form ``"{1,2}{3}"`` (one-based axes)."""
        groups = re.findall(r"\{([^{}]*)\}", text or "")
        if not groups or re.sub(r"\{[^{}]*\}", "", text).strip():
            raise InvalidPartitionError(f"Cannot parse blocks {text!r}; expected e.g. '{{1,2}}{{3}}'")
        try:
            blocks = [[int(a) for a in g.replace(" ", "").split(",") if a] for g in groups]
        except ValueError as exc:
            raise InvalidPartitionError(f"Cannot parse blocks {text!r}: {exc}") from exc
        return cls.from_one_based(blocks, exponents)

    @property
    def axes(self) -> tuple[int, ...]:
        return tuple(a for block in self.blocks for a in block)

    def covers(self, order: int) -> bool:
        return sorted(self.axes) == list(range(order))

    def validate_for(self, order: int) -> None:
        if not self.covers(order):
            raise InvalidPartitionError(
                f"Blocks {self.to_one_based()} do not cover the axes 1..{order}"
            )

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def to_one_based(self) -> str:
        return "".join("{" + ",".join(str(a + 1) for a in b) + "}" for b in self.blocks)
