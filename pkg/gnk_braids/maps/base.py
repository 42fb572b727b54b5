# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Shared pieces of the strand-deleting homomorphisms and of the index invariants."""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from ..utils.errors import PreconditionError
from ..words.base import Letter, LetterKind, LetterValue, StrandSet, Word, is_good_condition

__all__ = [
    "RelabelMode",
    "CrossingCounts",
    "delete_label",
    "require_kind",
    "require_good_condition",
]


class RelabelMode(Enum):
    """
    How labels survive the deletion of strand m.

    COMPACT shifts every label above m down by one; PRESERVE keeps labels as they are.
    """

    COMPACT = "compact"
    PRESERVE = "preserve"


def delete_label(
    support: StrandSet, m: int, mode: RelabelMode
) -> tuple[StrandSet, dict[int, int]]:
    """Support left after deleting `m` and the relabeling of the surviving labels."""
    remaining = support.without(m)
    if mode is RelabelMode.PRESERVE:
        mapping = {x: x for x in remaining}
    else:
        mapping = {x: x if x < m else x - 1 for x in remaining}
    return StrandSet(tuple(mapping.values())), mapping


@dataclass
class CrossingCounts:
    """Running occurrence counts of letter values while a word is scanned left to right."""

    counts: Counter[LetterValue] = field(default_factory=Counter)

    def add(self, letter: Letter) -> None:
        self.counts[letter.value] += 1

    def parity(self, *labels: int, eps: int | None = None) -> int:
        """Count mod 2 of the generator on `labels` (any order) with parity bit `eps`."""
        return self.counts[(tuple(sorted(labels)), eps)] % 2


def require_kind(w: Word, *kinds: LetterKind) -> None:
    if w.kind not in kinds:
        expected = " or ".join(k.value for k in kinds)
        raise PreconditionError(f"expected a {expected} word, got a {w.kind.value} word")


def require_good_condition(w: Word, operation: str) -> None:
    if not is_good_condition(w):
        raise PreconditionError(
            f"{operation} is defined only on words in good condition "
            "(every generator must occur an even number of times)"
        )
