from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from ..graph_core import GraphAssocError, mask_of, nodes_of


@dataclass(frozen=True)
class Shuffle:
    """A (p, q)-shuffle, stored as the image ``iota([p])`` inside ``[p+q]``."""

    p: int
    q: int
    image: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise GraphAssocError("shuffle degrees must be nonnegative")
        if self.image >> (self.p + self.q) or bin(self.image).count("1") != self.p:
            raise GraphAssocError(f"image must be a {self.p}-subset of 1..{self.p + self.q}")

    @cached_property
    def iota(self) -> tuple[int, ...]:
        """Increasing map ``[p] -> [p+q]``."""
        return nodes_of(self.image)

    @cached_property
    def iota_hat(self) -> tuple[int, ...]:
        """Increasing map ``[q] -> [p+q]`` onto the complement, i.e. ``i -> iota(i+p)``."""
        return nodes_of(((1 << (self.p + self.q)) - 1) & ~self.image)

    def as_permutation(self) -> tuple[int, ...]:
        return self.iota + self.iota_hat


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple[Shuffle, ...]:
    """All ``C(p+q, p)`` shuffles, by lexicographic order of their image sets."""
    if p < 0 or q < 0:
        raise GraphAssocError("shuffle degrees must be nonnegative")
    return tuple(
        Shuffle(p, q, mask_of(c)) for c in itertools.combinations(range(1, p + q + 1), p)
    )


def map_mask(mask: int, positions: tuple[int, ...]) -> int:
    """Image of a node set under ``i -> positions[i-1]``."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << (positions[i] - 1)
        mask >>= 1
        i += 1
    return out
