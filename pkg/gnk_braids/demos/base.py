# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Base classes for replayable worked examples."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override


@dataclass
class DemoCheck:
    """One recomputed value compared with its pinned value."""

    label: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class DemoResult:
    """Result of a demo run."""

    demo_id: str
    checks: list[DemoCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, label: str, expected: str, actual: object) -> None:
        self.checks.append(DemoCheck(label, expected, str(actual)))

    @override
    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"DemoResult(demo_id={self.demo_id}, {status}, checks={len(self.checks)})"


class Demo(ABC):
    """Base class for all demos."""

    @cached_property
    def name(self) -> str:
        return self.get_name()

    @cached_property
    def description(self) -> str:
        return self.get_description()

    @abstractmethod
    def get_name(self) -> str:
        """Get the demo id."""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Get a one-line description."""
        pass

    @abstractmethod
    def run(self) -> DemoResult:
        """Recompute the example from its raw input and compare with the pinned values."""
        pass

    def new_result(self) -> DemoResult:
        return DemoResult(self.name)
