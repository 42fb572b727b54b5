# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Free-product-valued invariants."""

from .mn import mn_w2, mn_w3
from .parity import parity_w2, parity_w3, w2_with_deleted_strand, w3_with_deleted_strand
from .profile import InvariantKind, compute_invariant, invariant_profile

__all__ = [
    "mn_w2",
    "mn_w3",
    "parity_w2",
    "parity_w3",
    "w2_with_deleted_strand",
    "w3_with_deleted_strand",
    "InvariantKind",
    "compute_invariant",
    "invariant_profile",
]
