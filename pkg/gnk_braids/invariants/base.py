# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""The prefix scan shared by every free-product-valued invariant."""

from collections.abc import Callable, Sequence

from ..groups.freeprod import FLetter, FWord, freduce
from ..maps.base import CrossingCounts
from ..utils.errors import PreconditionError
from ..words.base import Letter, Word

__all__ = ["IndexValue", "crossing_labels", "scan_crossings"]

# Maps (prefix counts, crossing letter, complement label) to that label's entry.
IndexValue = Callable[[CrossingCounts, Letter, int], tuple[int, ...]]


def crossing_labels(w: Word, labels: Sequence[int], arity: int) -> tuple[int, ...]:
    """Validate and sort the pair/triple an invariant is taken at."""
    ordered = tuple(sorted(labels))
    if len(ordered) != arity:
        raise PreconditionError(f"expected {arity} labels, got {len(ordered)}")
    if len(set(ordered)) != arity:
        raise PreconditionError(f"labels must be distinct, got {tuple(labels)}")
    w.support.require(*ordered)
    return ordered


def scan_crossings(
    w: Word,
    crossing: tuple[int, ...],
    index_value: IndexValue,
    width: int,
    reduced: bool = True,
) -> FWord:
    """
    Emit one FLetter per letter of `w` on the index set `crossing`.

    Counts are strict: a letter is added to the counts after its own entry is computed.
    """
    complement = w.support.complement(crossing)
    counts = CrossingCounts()
    letters: list[FLetter] = []
    for letter in w.letters:
        if letter.indices == crossing:
            values = tuple(index_value(counts, letter, label) for label in complement)
            letters.append(FLetter(complement, values, width))
        counts.add(letter)
    word = FWord(complement, tuple(letters), width)
    return freduce(word) if reduced else word
