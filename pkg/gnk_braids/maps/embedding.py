# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""The embedding phi_n: PB_n -> G_n^3 and its building blocks c^n_{i,j}."""

from ..utils.errors import PreconditionError
from ..words.base import Letter, LetterKind, StrandSet, Word, reduce_involutive
from .base import require_kind

__all__ = ["c_word", "c_letters", "phi", "phi_letter"]


def c_letters(n: int, i: int, j: int) -> list[Letter]:
    """a_{ijk} for k = j+1..n, then k = 1..j-1; k = i is skipped."""
    if not 1 <= i < j <= n:
        raise PreconditionError(f"c^{n}_{{{i},{j}}} needs 1 <= i < j <= n")
    ks = [*range(j + 1, n + 1), *range(1, j)]
    return [Letter(LetterKind.G3, (i, j, k)) for k in ks if k != i]


def c_word(n: int, i: int, j: int) -> Word:
    """
    c^n_{i,j} as a G3 word over {1..n}; it has n-2 letters.

    Raises:
        PreconditionError: unless 1 <= i < j <= n.
    """
    return Word(LetterKind.G3, StrandSet.range(n), tuple(c_letters(n, i, j)))


def phi_letter(n: int, letter: Letter) -> list[Letter]:
    """Unreduced image of one braid letter."""
    i, j = letter.indices
    if j > n:
        raise PreconditionError(f"b({i},{j}) does not live on {n} strands")
    prefix: list[Letter] = []
    for t in range(i + 1, j):
        prefix.extend(reversed(c_letters(n, i, t)))
    middle = c_letters(n, i, j) * 2
    suffix: list[Letter] = []
    for t in range(j - 1, i, -1):
        suffix.extend(c_letters(n, i, t))
    image = prefix + middle + suffix
    if letter.sign == -1:
        image.reverse()
    return image


def phi(w: Word, n: int, reduce: bool = True) -> Word:
    """
    phi_n on a PB word over {1..n}.

    Args:
        w: the braid word.
        n: strand count; the support of `w` must be exactly {1..n}.
        reduce: cancel adjacent equal letters in the image.
    """
    require_kind(w, LetterKind.PB)
    if w.support != StrandSet.range(n):
        raise PreconditionError(f"phi_{n} needs a word over 1..{n}, got support {w.support}")
    letters = [image for letter in w.letters for image in phi_letter(n, letter)]
    image = Word(LetterKind.G3, StrandSet.range(n), tuple(letters))
    return reduce_involutive(image) if reduce else image
