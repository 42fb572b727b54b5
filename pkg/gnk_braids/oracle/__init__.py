# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Braid triviality oracle and Brunnian detection."""

from .artin import (
    artin_action,
    bounded_artin_action,
    expand_to_artin,
    is_trivial_braid,
    is_trivial_braid_bounded,
)
from .brunnian import (
    BrunnianReport,
    StrandReport,
    is_brunnian,
    is_brunnian_async,
    is_brunnian_g3,
)

__all__ = [
    "artin_action",
    "bounded_artin_action",
    "expand_to_artin",
    "is_trivial_braid",
    "is_trivial_braid_bounded",
    "BrunnianReport",
    "StrandReport",
    "is_brunnian",
    "is_brunnian_async",
    "is_brunnian_g3",
]
