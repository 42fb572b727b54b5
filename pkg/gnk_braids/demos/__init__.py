# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Replayable worked examples, each pinned to its expected values."""

from typing import Type

from ..utils.errors import DemoError
from .base import Demo, DemoCheck, DemoResult
from .worked_examples import (
    BrunnianMN3Demo,
    BrunnianPB6Demo,
    BrunnianW246Demo,
    CommutatorG52Demo,
    G53Beta1Demo,
    G53Psi5Demo,
    G53W245Demo,
    PB3ProjectionDemo,
    Psi4Demo,
    S5FDemo,
    S5W124pDemo,
    W124Demo,
)

__all__ = ["Demo", "DemoCheck", "DemoResult", "demos_registry", "get_demo"]

demos_registry: dict[str, Type[Demo]] = {
    "psi4": Psi4Demo,
    "w124": W124Demo,
    "commutator-g52": CommutatorG52Demo,
    "g53-beta1": G53Beta1Demo,
    "g53-psi5": G53Psi5Demo,
    "g53-w245": G53W245Demo,
    "brunnian-pb6": BrunnianPB6Demo,
    "brunnian-mn3": BrunnianMN3Demo,
    "brunnian-w246": BrunnianW246Demo,
    "s5-f": S5FDemo,
    "s5-w124p": S5W124pDemo,
    "pb3-projection": PB3ProjectionDemo,
}


def get_demo(demo_id: str) -> Demo:
    try:
        return demos_registry[demo_id]()
    except KeyError:
        known = ", ".join(demos_registry)
        raise DemoError(f"unknown demo {demo_id!r}, expected one of: {known}") from None
