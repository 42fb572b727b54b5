# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Word problem of PB_n through the Artin action on the free group F_n."""

from collections.abc import Iterable

from ..groups.free_group import BraidAutomorphism
from ..maps.base import require_kind
from ..utils.errors import PreconditionError
from ..words.base import Letter, LetterKind, StrandSet, Word

__all__ = [
    "ArtinLetter",
    "DEFAULT_MAX_IMAGE_SYMBOLS",
    "expand_letter",
    "expand_to_artin",
    "artin_action",
    "bounded_artin_action",
    "is_trivial_braid",
    "is_trivial_braid_bounded",
]

# (i, e) stands for sigma_i^e with e = +1 or -1.
ArtinLetter = tuple[int, int]

# Images of long nontrivial braids grow quickly; past this many symbols the check gives up.
DEFAULT_MAX_IMAGE_SYMBOLS = 20_000


def expand_letter(letter: Letter) -> list[ArtinLetter]:
    """b(i,j)^s = sigma_{j-1}..sigma_{i+1} sigma_i^{2s} sigma_{i+1}^-1..sigma_{j-1}^-1."""
    i, j = letter.indices
    sign = letter.sign or 1
    head = [(t, 1) for t in range(j - 1, i, -1)]
    tail = [(t, -1) for t in range(i + 1, j)]
    return [*head, (i, sign), (i, sign), *tail]


def _require_range(w: Word, n: int) -> None:
    require_kind(w, LetterKind.PB)
    if w.support != StrandSet.range(n):
        raise PreconditionError(f"expected a braid over 1..{n}, got support {w.support}")


def expand_to_artin(w: Word, n: int) -> list[ArtinLetter]:
    _require_range(w, n)
    return [sigma for letter in w.letters for sigma in expand_letter(letter)]


def _cancel_inverse_pairs(sigmas: Iterable[ArtinLetter]) -> list[ArtinLetter]:
    stack: list[ArtinLetter] = []
    for i, sign in sigmas:
        if stack and stack[-1] == (i, -sign):
            stack.pop()
        else:
            stack.append((i, sign))
    return stack


def artin_action(w: Word, n: int) -> BraidAutomorphism:
    """The automorphism of F_n induced by `w`; the first letter acts first."""
    action = BraidAutomorphism.identity(n)
    for i, sign in _cancel_inverse_pairs(expand_to_artin(w, n)):
        action = action.then_sigma(i, sign)
    return action


def bounded_artin_action(
    w: Word, n: int, max_symbols: int = DEFAULT_MAX_IMAGE_SYMBOLS
) -> BraidAutomorphism | None:
    """`artin_action`, or None as soon as the images hold more than `max_symbols` symbols."""
    action = BraidAutomorphism.identity(n)
    for i, sign in _cancel_inverse_pairs(expand_to_artin(w, n)):
        action = action.then_sigma(i, sign)
        if action.size > max_symbols:
            return None
    return action


def is_trivial_braid(w: Word, n: int) -> bool:
    return artin_action(w, n).is_identity()


def is_trivial_braid_bounded(
    w: Word, n: int, max_symbols: int = DEFAULT_MAX_IMAGE_SYMBOLS
) -> bool | None:
    """Like `is_trivial_braid`, but None when the images outgrow `max_symbols`."""
    action = bounded_artin_action(w, n, max_symbols)
    return None if action is None else action.is_identity()
