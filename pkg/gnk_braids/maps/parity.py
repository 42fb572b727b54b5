# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Strand deletions that remember the deleted strand as parity bits: psi_k and f."""

from ..words.base import Letter, LetterKind, Word
from .base import CrossingCounts, RelabelMode, delete_label, require_good_condition, require_kind

__all__ = ["psi", "f_parity"]


def psi(w: Word, k: int, relabel: RelabelMode = RelabelMode.PRESERVE) -> Word:
    """
    psi_k: G2 word in good condition -> PG2 word without strand k.

    Each surviving a(i,j) gets the bit (#a(i,k) + #a(j,k) before it) mod 2.

    Raises:
        PreconditionError: wrong alphabet, `k` not in the support, or `w` not in good condition.
    """
    require_kind(w, LetterKind.G2)
    w.support.require(k)
    require_good_condition(w, f"psi_{k}")
    support, mapping = delete_label(w.support, k, relabel)
    counts = CrossingCounts()
    letters: list[Letter] = []
    for letter in w.letters:
        if not letter.involves(k):
            i, j = letter.indices
            eps = (counts.parity(i, k) + counts.parity(j, k)) % 2
            letters.append(Letter(LetterKind.PG2, letter.relabel(mapping).indices, parity=eps))
        counts.add(letter)
    return Word(LetterKind.PG2, support, tuple(letters))


def f_parity(w: Word, d: int, relabel: RelabelMode = RelabelMode.PRESERVE) -> Word:
    """
    f with deleted label d: G3 word -> PG3 word without strand d.

    A surviving a(i,j,k), i<j<k, gets the bit (#a(j,k,d) + #a(i,k,d) before it) mod 2.
    """
    require_kind(w, LetterKind.G3)
    support, mapping = delete_label(w.support, d, relabel)
    counts = CrossingCounts()
    letters: list[Letter] = []
    for letter in w.letters:
        if not letter.involves(d):
            i, j, k = letter.indices
            eps = (counts.parity(j, k, d) + counts.parity(i, k, d)) % 2
            letters.append(Letter(LetterKind.PG3, letter.relabel(mapping).indices, parity=eps))
        counts.add(letter)
    return Word(LetterKind.PG3, support, tuple(letters))
