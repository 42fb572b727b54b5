# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""gnk-braids - words, homomorphisms and free-product invariants of G_n^k and PB_n."""

__version__ = "0.1.0"

from .groups.freeprod import FWord, freduce
from .invariants import InvariantKind, compute_invariant
from .maps import RelabelMode, phi, psi
from .oracle import is_brunnian, is_trivial_braid
from .words import Word, parse_word

__all__ = [
    "FWord",
    "freduce",
    "InvariantKind",
    "compute_invariant",
    "RelabelMode",
    "phi",
    "psi",
    "is_brunnian",
    "is_trivial_braid",
    "Word",
    "parse_word",
]
