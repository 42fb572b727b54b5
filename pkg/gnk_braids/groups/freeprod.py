# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Free products of copies of Z_2 indexed by functions complement -> Z_2 (or Z_2 x Z_2)."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

from ..utils.errors import FreeProductError

__all__ = ["FLetter", "FWord", "freduce", "is_trivial", "format_fword"]


@dataclass(frozen=True)
class FLetter:
    """
    A generator sigma of F_n^2 / F_n^3.

    `values[t]` is the bit tuple attached to `complement[t]`: one bit for rank-2
    letters, a pair for rank-3 letters of the MN invariant.
    """

    complement: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]
    width: int = 1

    def __post_init__(self):
        if self.width not in (1, 2):
            raise FreeProductError(f"letter width must be 1 or 2, got {self.width}")
        if len(self.values) != len(self.complement):
            raise FreeProductError(
                f"{len(self.values)} values for {len(self.complement)} complement labels"
            )
        for entry in self.values:
            if len(entry) != self.width or any(bit not in (0, 1) for bit in entry):
                raise FreeProductError(f"bad entry {entry} for a width-{self.width} letter")

    @classmethod
    def from_bits(cls, complement: Sequence[int], bits: Sequence[int]) -> "FLetter":
        return cls(tuple(complement), tuple((bit % 2,) for bit in bits), 1)

    @classmethod
    def from_pairs(
        cls, complement: Sequence[int], pairs: Sequence[tuple[int, int]]
    ) -> "FLetter":
        return cls(tuple(complement), tuple((a % 2, b % 2) for a, b in pairs), 2)

    def at(self, label: int) -> tuple[int, ...]:
        try:
            return self.values[self.complement.index(label)]
        except ValueError:
            raise FreeProductError(f"label {label} is not in the complement") from None

    @override
    def __str__(self) -> str:
        if self.width == 1:
            body = "".join(str(entry[0]) for entry in self.values)
        else:
            body = ",".join("".join(str(bit) for bit in entry) for entry in self.values)
        return f"z({body})"


@dataclass(frozen=True)
class FWord:
    """A word in the free product; all letters share `complement` and `width`."""

    complement: tuple[int, ...]
    letters: tuple[FLetter, ...] = ()
    width: int = 1

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if letter.complement != self.complement or letter.width != self.width:
                raise FreeProductError(
                    f"letter {letter} over {letter.complement} does not belong to a "
                    f"word over {self.complement}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, letters: Iterable[FLetter], complement: Sequence[int], width: int = 1):
        return cls(tuple(complement), tuple(letters), width)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[FLetter]:
        return iter(self.letters)

    def __add__(self, other: "FWord") -> "FWord":
        if other.complement != self.complement or other.width != self.width:
            raise FreeProductError("cannot multiply words over different complements")
        return FWord(self.complement, self.letters + other.letters, self.width)

    def inverse(self) -> "FWord":
        return FWord(self.complement, tuple(reversed(self.letters)), self.width)

    @override
    def __str__(self) -> str:
        return format_fword(self)


def freduce(w: FWord) -> FWord:
    """Delete adjacent equal letters (sigma^2 = 1) until none remain; the result is unique."""
    stack: list[FLetter] = []
    for letter in w.letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return FWord(w.complement, tuple(stack), w.width)


def is_trivial(w: FWord) -> bool:
    return not freduce(w).letters


def format_fword(w: FWord) -> str:
    return " ".join(str(letter) for letter in w.letters) or "1"
