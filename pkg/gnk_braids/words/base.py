# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Alphabets, letters and words of G_n^2, G_n^3, their parity variants and PB_n."""

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

from ..utils.errors import PreconditionError, WordError

__all__ = [
    "LetterKind",
    "StrandSet",
    "Letter",
    "LetterValue",
    "Word",
    "reduce_involutive",
    "is_good_condition",
    "letter_counts",
    "word_inverse",
    "concat",
    "commutator",
    "conjugate",
]


class LetterKind(Enum):
    """The five alphabets a word can be written in."""

    G2 = "g2"
    G3 = "g3"
    PG2 = "pg2"
    PG3 = "pg3"
    PB = "pb"

    @property
    def arity(self) -> int:
        return 3 if self in (LetterKind.G3, LetterKind.PG3) else 2

    @property
    def has_parity(self) -> bool:
        return self in (LetterKind.PG2, LetterKind.PG3)

    @property
    def is_involutive(self) -> bool:
        return self is not LetterKind.PB


@dataclass(frozen=True)
class StrandSet:
    """Strand labels of a word: distinct positive integers, kept ascending."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(sorted(self.labels))
        if not labels:
            raise WordError("a strand set must contain at least one label")
        if labels[0] < 1:
            raise WordError(f"strand labels must be positive, got {labels[0]}")
        if len(set(labels)) != len(labels):
            raise WordError(f"strand labels must be distinct, got {labels}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def range(cls, n: int) -> "StrandSet":
        """The contiguous set {1, ..., n}."""
        if n < 1:
            raise WordError(f"strand count must be positive, got {n}")
        return cls(tuple(range(1, n + 1)))

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def is_contiguous(self) -> bool:
        return self.labels == tuple(range(1, len(self.labels) + 1))

    def require(self, *labels: int) -> None:
        for label in labels:
            if label not in self.labels:
                raise PreconditionError(f"label {label} is not in the support {self}")

    def without(self, label: int) -> "StrandSet":
        self.require(label)
        return StrandSet(tuple(x for x in self.labels if x != label))

    def complement(self, indices: Iterable[int]) -> tuple[int, ...]:
        """Labels of the support outside `indices`, ascending."""
        excluded = set(indices)
        return tuple(x for x in self.labels if x not in excluded)

    @override
    def __str__(self) -> str:
        return ",".join(str(x) for x in self.labels)


# (sorted indices, parity) identifies a generator; PB signs are not part of it.
LetterValue = tuple[tuple[int, ...], int | None]


@dataclass(frozen=True)
class Letter:
    """
    One generator occurrence.

    `indices` is stored sorted, `parity` is set exactly for PG2/PG3 letters and
    `sign` exactly for PB letters.
    """

    kind: LetterKind
    indices: tuple[int, ...]
    parity: int | None = None
    sign: int | None = None

    def __post_init__(self):
        indices = tuple(sorted(self.indices))
        if len(indices) != self.kind.arity:
            raise WordError(
                f"{self.kind.value} letters take {self.kind.arity} indices, got {indices}"
            )
        if len(set(indices)) != len(indices):
            raise WordError(f"letter indices must be distinct, got {indices}")
        if indices[0] < 1:
            raise WordError(f"letter indices must be positive, got {indices}")
        if self.kind.has_parity:
            if self.parity not in (0, 1):
                raise WordError(f"{self.kind.value} letters need a parity bit 0 or 1")
        elif self.parity is not None:
            raise WordError(f"{self.kind.value} letters carry no parity bit")
        if self.kind is LetterKind.PB:
            if self.sign not in (1, -1):
                raise WordError("pb letters need a sign of +1 or -1")
        elif self.sign is not None:
            raise WordError(f"{self.kind.value} letters carry no sign")
        object.__setattr__(self, "indices", indices)

    @property
    def value(self) -> LetterValue:
        return self.indices, self.parity

    def involves(self, label: int) -> bool:
        return label in self.indices

    def inverse(self) -> "Letter":
        if self.kind is LetterKind.PB:
            return Letter(self.kind, self.indices, sign=-(self.sign or 1))
        return self

    def cancels(self, other: "Letter") -> bool:
        """True when `self * other` is a relator of the form x*x^-1."""
        return self == other.inverse()

    def relabel(self, mapping: Mapping[int, int]) -> "Letter":
        return Letter(
            self.kind,
            tuple(mapping[x] for x in self.indices),
            parity=self.parity,
            sign=self.sign,
        )


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters of one kind over an explicit strand support."""

    kind: LetterKind
    support: StrandSet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if letter.kind is not self.kind:
                raise WordError(
                    f"letter of kind {letter.kind.value} in a {self.kind.value} word"
                )
            for label in letter.indices:
                if label not in self.support:
                    raise WordError(f"letter index {label} lies outside the support {self.support}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_letters(
        cls, kind: LetterKind, letters: Iterable[Letter], support: StrandSet | None = None
    ) -> "Word":
        """Build a word; without an explicit support the union of letter indices is used."""
        letters = tuple(letters)
        if support is None:
            labels = {x for letter in letters for x in letter.indices}
            if not labels:
                raise WordError("an empty word needs an explicit strand support")
            support = StrandSet(tuple(labels))
        return cls(kind, support, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, position: int) -> Letter:
        return self.letters[position]

    def is_empty(self) -> bool:
        return not self.letters

    def with_letters(self, letters: Iterable[Letter]) -> "Word":
        return Word(self.kind, self.support, tuple(letters))

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    @override
    def __str__(self) -> str:
        from .parser import format_word

        return format_word(self)


def reduce_involutive(w: Word) -> Word:
    """Cancel adjacent x*x (x*x^-1 for PB letters) until none is left."""
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1].cancels(letter):
            stack.pop()
        else:
            stack.append(letter)
    return w.with_letters(stack)


def letter_counts(w: Word) -> Counter[LetterValue]:
    return Counter(letter.value for letter in w.letters)


def is_good_condition(w: Word) -> bool:
    """Every generator (parity bits included, PB signs ignored) occurs an even number of times."""
    return all(count % 2 == 0 for count in letter_counts(w).values())


def word_inverse(w: Word) -> Word:
    return w.with_letters(letter.inverse() for letter in reversed(w.letters))


def concat(*words: Word) -> Word:
    if not words:
        raise WordError("concat needs at least one word")
    first = words[0]
    for other in words[1:]:
        if other.kind is not first.kind:
            raise WordError(
                f"cannot concatenate a {other.kind.value} word to a {first.kind.value} word"
            )
        if other.support != first.support:
            raise WordError(
                f"cannot concatenate words over supports {first.support} and {other.support}"
            )
    return first.with_letters(letter for w in words for letter in w.letters)


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1, unreduced."""
    return concat(x, y, word_inverse(x), word_inverse(y))


def conjugate(w: Word, g: Word) -> Word:
    """g w g^-1, unreduced."""
    return concat(g, w, word_inverse(g))
