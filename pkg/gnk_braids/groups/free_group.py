# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Freely reduced words in F_n and automorphisms of F_n given by generator images."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

from ..utils.errors import WordError

__all__ = ["FreeGroupWord", "BraidAutomorphism"]


def _free_reduce(symbols: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for symbol in symbols:
        if stack and stack[-1] == -symbol:
            stack.pop()
        else:
            stack.append(symbol)
    return tuple(stack)


@dataclass(frozen=True)
class FreeGroupWord:
    """Signed generator symbols: `g` stands for x_g and `-g` for x_g^-1. Always reduced."""

    symbols: tuple[int, ...] = ()

    def __post_init__(self):
        if any(symbol == 0 for symbol in self.symbols):
            raise WordError("free group symbols must be nonzero")
        object.__setattr__(self, "symbols", _free_reduce(self.symbols))

    @classmethod
    def generator(cls, g: int, power: int = 1) -> "FreeGroupWord":
        symbol = g if power > 0 else -g
        return cls((symbol,) * abs(power))

    @classmethod
    def of(cls, *symbols: int) -> "FreeGroupWord":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __mul__(self, other: "FreeGroupWord") -> "FreeGroupWord":
        return FreeGroupWord(self.symbols + other.symbols)

    def inverse(self) -> "FreeGroupWord":
        return FreeGroupWord(tuple(-s for s in reversed(self.symbols)))

    def is_identity(self) -> bool:
        return not self.symbols

    def substitute(self, images: Mapping[int, "FreeGroupWord"]) -> "FreeGroupWord":
        """Replace x_g by images[g]; generators missing from `images` stay fixed."""
        out: list[int] = []
        for symbol in self.symbols:
            image = images.get(abs(symbol))
            if image is None:
                out.append(symbol)
            elif symbol > 0:
                out.extend(image.symbols)
            else:
                out.extend(-s for s in reversed(image.symbols))
        return FreeGroupWord(tuple(out))

    @override
    def __str__(self) -> str:
        if not self.symbols:
            return "1"
        return " ".join(f"x{abs(s)}" + ("^-1" if s < 0 else "") for s in self.symbols)


@dataclass(frozen=True)
class BraidAutomorphism:
    """
    An automorphism of F_n stored as the images of x_1..x_n.

    Automorphisms act on the right: `a.then(b)` first applies `a`, then `b`.
    """

    images: tuple[FreeGroupWord, ...]

    @classmethod
    def identity(cls, n: int) -> "BraidAutomorphism":
        return cls(tuple(FreeGroupWord.generator(g) for g in range(1, n + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def size(self) -> int:
        """Total number of symbols over all generator images."""
        return sum(len(image) for image in self.images)

    @staticmethod
    def sigma_images(i: int, sign: int) -> dict[int, FreeGroupWord]:
        """Images of x_i and x_{i+1} under sigma_i^{sign}; all other generators are fixed."""
        x, y = i, i + 1
        if sign > 0:
            return {x: FreeGroupWord.of(x, y, -x), y: FreeGroupWord.of(x)}
        return {x: FreeGroupWord.of(y), y: FreeGroupWord.of(-y, x, y)}

    @classmethod
    def sigma(cls, n: int, i: int, sign: int = 1) -> "BraidAutomorphism":
        if not 1 <= i < n:
            raise WordError(f"sigma_{i} does not exist on {n} strands")
        return cls.identity(n).then_sigma(i, sign)

    def then_sigma(self, i: int, sign: int) -> "BraidAutomorphism":
        if not 1 <= i < self.rank:
            raise WordError(f"sigma_{i} does not exist on {self.rank} strands")
        images = self.sigma_images(i, sign)
        return BraidAutomorphism(tuple(image.substitute(images) for image in self.images))

    def then(self, other: "BraidAutomorphism") -> "BraidAutomorphism":
        if other.rank != self.rank:
            raise WordError("cannot compose automorphisms of different ranks")
        images = {g: image for g, image in enumerate(other.images, start=1)}
        return BraidAutomorphism(tuple(image.substitute(images) for image in self.images))

    def is_identity(self) -> bool:
        return all(
            image.symbols == (g,) for g, image in enumerate(self.images, start=1)
        )
