# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Homomorphisms between the braid-like groups."""

from .base import CrossingCounts, RelabelMode, delete_label
from .deletion import delete_strand_g3, delete_strand_pb, project_g3_to_g2
from .embedding import c_word, phi
from .parity import f_parity, psi

__all__ = [
    "CrossingCounts",
    "RelabelMode",
    "delete_label",
    "delete_strand_pb",
    "delete_strand_g3",
    "project_g3_to_g2",
    "c_word",
    "phi",
    "psi",
    "f_parity",
]
