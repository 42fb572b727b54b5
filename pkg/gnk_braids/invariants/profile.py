# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Invariant selection by name and evaluation over every pair or triple of a support."""

from collections.abc import Sequence
from enum import Enum
from itertools import combinations

from ..groups.freeprod import FWord
from ..utils.errors import PreconditionError
from ..words.base import LetterKind, Word
from .mn import mn_w2, mn_w3
from .parity import parity_w2, parity_w3, w2_with_deleted_strand, w3_with_deleted_strand

__all__ = ["InvariantKind", "compute_invariant", "invariant_profile"]


class InvariantKind(Enum):
    MN2 = "mn2"
    MN3 = "mn3"
    P2 = "p2"
    P3 = "p3"
    W2DEL = "w2del"
    W3DEL = "w3del"

    @property
    def arity(self) -> int:
        return 3 if self in (InvariantKind.MN3, InvariantKind.P3, InvariantKind.W3DEL) else 2

    @property
    def source_kind(self) -> LetterKind:
        return {
            InvariantKind.MN2: LetterKind.G2,
            InvariantKind.MN3: LetterKind.G3,
            InvariantKind.P2: LetterKind.PG2,
            InvariantKind.P3: LetterKind.PG3,
            InvariantKind.W2DEL: LetterKind.G2,
            InvariantKind.W3DEL: LetterKind.G3,
        }[self]

    @property
    def needs_deleted_strand(self) -> bool:
        return self in (InvariantKind.W2DEL, InvariantKind.W3DEL)


def compute_invariant(
    w: Word,
    kind: InvariantKind,
    labels: Sequence[int],
    deleted: int | None = None,
    reduced: bool = True,
) -> FWord:
    """Evaluate one invariant at the pair/triple `labels`."""
    if len(labels) != kind.arity:
        raise PreconditionError(f"{kind.value} is taken at {kind.arity} labels, got {len(labels)}")
    if kind.needs_deleted_strand and deleted is None:
        raise PreconditionError(f"{kind.value} needs a deleted strand")
    match kind:
        case InvariantKind.MN2:
            return mn_w2(w, *labels, reduced=reduced)
        case InvariantKind.MN3:
            return mn_w3(w, *labels, reduced=reduced)
        case InvariantKind.P2:
            return parity_w2(w, *labels, reduced=reduced)
        case InvariantKind.P3:
            return parity_w3(w, *labels, reduced=reduced)
        case InvariantKind.W2DEL:
            assert deleted is not None
            return w2_with_deleted_strand(w, *labels, deleted, reduced=reduced)
        case InvariantKind.W3DEL:
            assert deleted is not None
            return w3_with_deleted_strand(w, *labels, deleted, reduced=reduced)


def invariant_profile(
    w: Word, kind: InvariantKind, deleted: int | None = None, reduced: bool = True
) -> dict[tuple[int, ...], FWord]:
    """The invariant at every pair (or triple) of the support, the deleted strand excluded."""
    labels = [x for x in w.support if x != deleted]
    return {
        combo: compute_invariant(w, kind, combo, deleted, reduced)
        for combo in combinations(labels, kind.arity)
    }
