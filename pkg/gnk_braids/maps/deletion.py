# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Strand deletions p_m (PB_n), q_m (G_n^3) and the projection r_m: G_n^3 -> G_n^2."""

from ..words.base import Letter, LetterKind, Word
from .base import RelabelMode, delete_label, require_kind

__all__ = ["delete_strand_pb", "delete_strand_g3", "project_g3_to_g2"]


def delete_strand_pb(w: Word, m: int, relabel: RelabelMode = RelabelMode.COMPACT) -> Word:
    """
    p_m: erase every b(i,j) with m in {i,j}; the rest keep their sign.

    Raises:
        PreconditionError: `w` is not a PB word or `m` is not in its support.
    """
    require_kind(w, LetterKind.PB)
    support, mapping = delete_label(w.support, m, relabel)
    letters = [letter.relabel(mapping) for letter in w.letters if not letter.involves(m)]
    return Word(LetterKind.PB, support, tuple(letters))


def delete_strand_g3(w: Word, m: int, relabel: RelabelMode = RelabelMode.COMPACT) -> Word:
    """q_m: erase every a(i,j,k) with m in {i,j,k}."""
    require_kind(w, LetterKind.G3)
    support, mapping = delete_label(w.support, m, relabel)
    letters = [letter.relabel(mapping) for letter in w.letters if not letter.involves(m)]
    return Word(LetterKind.G3, support, tuple(letters))


def project_g3_to_g2(w: Word, m: int, relabel: RelabelMode = RelabelMode.PRESERVE) -> Word:
    """
    r_m: keep only the letters through m, each as the G2 letter on its other two labels.

    Letters that do not involve `m` map to the identity.
    """
    require_kind(w, LetterKind.G3)
    support, mapping = delete_label(w.support, m, relabel)
    letters: list[Letter] = []
    for letter in w.letters:
        if not letter.involves(m):
            continue
        rest = tuple(mapping[x] for x in letter.indices if x != m)
        letters.append(Letter(LetterKind.G2, rest))
    return Word(LetterKind.G2, support, tuple(letters))
