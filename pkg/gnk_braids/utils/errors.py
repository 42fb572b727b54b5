# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Exception hierarchy shared by every gnk_braids module."""

__all__ = [
    "GnkError",
    "WordError",
    "MoveNotApplicable",
    "PreconditionError",
    "FreeProductError",
    "DemoError",
    "ConfigError",
]


class GnkError(Exception):
    """
    Base class for domain errors.

    The CLI maps every subclass to exit code 1 and prints `message`.
    """

    def __init__(self, message: str):
        self.message: str = message
        super().__init__(self.message)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} message={self.message!r}>"


class WordError(GnkError):
    """Malformed letter or word, or an alphabet/support mismatch."""


class MoveNotApplicable(GnkError):
    """The requested relation does not match the word at the given position."""


class PreconditionError(GnkError):
    """An operation was called outside its domain (e.g. a word not in good condition)."""


class FreeProductError(GnkError):
    """Letters of a free-product word disagree on their complement set."""


class DemoError(GnkError):
    """Unknown demo id."""


class ConfigError(GnkError):
    """A configuration value is outside its allowed set."""
