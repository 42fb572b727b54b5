# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Words over the alphabets of G_n^2, G_n^3, their parity variants and PB_n."""

from .base import (
    Letter,
    LetterKind,
    StrandSet,
    Word,
    commutator,
    concat,
    conjugate,
    is_good_condition,
    letter_counts,
    reduce_involutive,
    word_inverse,
)
from .moves import MoveDirection, MoveSpec, Relation, applicable_moves, apply_move
from .parser import format_letter, format_word, parse_letter, parse_word

__all__ = [
    "Letter",
    "LetterKind",
    "StrandSet",
    "Word",
    "commutator",
    "concat",
    "conjugate",
    "is_good_condition",
    "letter_counts",
    "reduce_involutive",
    "word_inverse",
    "MoveDirection",
    "MoveSpec",
    "Relation",
    "applicable_moves",
    "apply_move",
    "format_letter",
    "format_word",
    "parse_letter",
    "parse_word",
]
