# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Target groups: free products of Z_2 and the free group acted on by braids."""

from .free_group import BraidAutomorphism, FreeGroupWord
from .freeprod import FLetter, FWord, format_fword, freduce, is_trivial

__all__ = [
    "BraidAutomorphism",
    "FreeGroupWord",
    "FLetter",
    "FWord",
    "format_fword",
    "freduce",
    "is_trivial",
]
