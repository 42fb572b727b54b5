# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""MN-invariants of G_n^2 and G_n^3 words in good condition."""

from ..groups.freeprod import FWord
from ..maps.base import CrossingCounts, require_good_condition, require_kind
from ..words.base import Letter, LetterKind, Word
from .base import crossing_labels, scan_crossings

__all__ = ["mn_w2", "mn_w3"]


def mn_w2(w: Word, i: int, j: int, reduced: bool = True) -> FWord:
    """
    w_(i,j): at each a(i,j), k -> (#a(i,k) + #a(j,k) before it) mod 2 for k off the pair.

    Raises:
        PreconditionError: wrong alphabet, bad labels or `w` not in good condition.
    """
    require_kind(w, LetterKind.G2)
    i, j = crossing_labels(w, (i, j), 2)
    require_good_condition(w, f"w_({i},{j})")

    def index_value(counts: CrossingCounts, _: Letter, k: int) -> tuple[int, ...]:
        return ((counts.parity(i, k) + counts.parity(j, k)) % 2,)

    return scan_crossings(w, (i, j), index_value, 1, reduced)


def mn_w3(w: Word, i: int, j: int, k: int, reduced: bool = True) -> FWord:
    """w_(i,j,k): at each a(i,j,k), m -> (N_jkm + N_ijm, N_ikm + N_ijm) mod 2."""
    require_kind(w, LetterKind.G3)
    i, j, k = crossing_labels(w, (i, j, k), 3)
    require_good_condition(w, f"w_({i},{j},{k})")

    def index_value(counts: CrossingCounts, _: Letter, m: int) -> tuple[int, ...]:
        ijm = counts.parity(i, j, m)
        return (
            (counts.parity(j, k, m) + ijm) % 2,
            (counts.parity(i, k, m) + ijm) % 2,
        )

    return scan_crossings(w, (i, j, k), index_value, 2, reduced)
