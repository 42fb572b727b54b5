# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Parity invariants of PG2/PG3 words and their composites with psi_l and f."""

from ..groups.freeprod import FWord
from ..maps.base import CrossingCounts, RelabelMode, require_kind
from ..maps.parity import f_parity, psi
from ..utils.errors import PreconditionError
from ..words.base import Letter, LetterKind, Word
from .base import crossing_labels, scan_crossings

__all__ = ["parity_w2", "parity_w3", "w2_with_deleted_strand", "w3_with_deleted_strand"]


def parity_w2(w: Word, i: int, j: int, reduced: bool = True) -> FWord:
    """
    w^p_ij, i < j: at each a(i,j:e), k -> N^0_ik + N^e_jk mod 2.

    No good condition is needed.
    """
    require_kind(w, LetterKind.PG2)
    i, j = crossing_labels(w, (i, j), 2)

    def index_value(counts: CrossingCounts, letter: Letter, k: int) -> tuple[int, ...]:
        eps = letter.parity or 0
        return ((counts.parity(i, k, eps=0) + counts.parity(j, k, eps=eps)) % 2,)

    return scan_crossings(w, (i, j), index_value, 1, reduced)


def parity_w3(w: Word, i: int, j: int, k: int, reduced: bool = True) -> FWord:
    """
    w^p_ijk, i < j < k: at each a(i,j,k:e), label m off the triple maps to

        N^0_ikm + N^e_jkm              when m < k
        N^0_ikm + N^e_jkm + N^(1-e)_ijm  when m > k
    """
    require_kind(w, LetterKind.PG3)
    i, j, k = crossing_labels(w, (i, j, k), 3)

    def index_value(counts: CrossingCounts, letter: Letter, m: int) -> tuple[int, ...]:
        eps = letter.parity or 0
        total = counts.parity(i, k, m, eps=0) + counts.parity(j, k, m, eps=eps)
        if m > k:
            total += counts.parity(i, j, m, eps=1 - eps)
        return (total % 2,)

    return scan_crossings(w, (i, j, k), index_value, 1, reduced)


def w2_with_deleted_strand(w: Word, i: int, j: int, deleted: int, reduced: bool = True) -> FWord:
    """w^l_ij = w^p_ij o psi_l, l = `deleted`, on a G2 word in good condition."""
    if deleted in (i, j):
        raise PreconditionError(f"deleted strand {deleted} must differ from the pair ({i},{j})")
    return parity_w2(psi(w, deleted, RelabelMode.PRESERVE), i, j, reduced)


def w3_with_deleted_strand(
    w: Word, i: int, j: int, k: int, deleted: int, reduced: bool = True
) -> FWord:
    """w^p_ijk o f with strand `deleted` removed."""
    if deleted in (i, j, k):
        raise PreconditionError(
            f"deleted strand {deleted} must differ from the triple ({i},{j},{k})"
        )
    return parity_w3(f_parity(w, deleted, RelabelMode.PRESERVE), i, j, k, reduced)
