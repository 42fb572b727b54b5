# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

from ..maps.base import RelabelMode
from .constants import DEFAULT_CONFIG_FILE
from .errors import ConfigError

# Deletion maps whose relabeling can be configured, with their defaults.
DEFAULT_RELABEL: dict[str, RelabelMode] = {
    "p": RelabelMode.COMPACT,
    "q": RelabelMode.COMPACT,
    "r": RelabelMode.PRESERVE,
    "psi": RelabelMode.PRESERVE,
    "f": RelabelMode.PRESERVE,
}


def _parse_relabel(raw: dict[str, Any]) -> dict[str, RelabelMode]:
    relabel = dict(DEFAULT_RELABEL)
    for hom, value in raw.items():
        if hom not in DEFAULT_RELABEL:
            raise ConfigError(
                f"unknown map {hom!r} in 'relabel', expected one of {', '.join(DEFAULT_RELABEL)}"
            )
        try:
            relabel[hom] = RelabelMode(str(value))
        except ValueError:
            raise ConfigError(
                f"relabel mode for {hom!r} must be 'compact' or 'preserve', got {value!r}"
            ) from None
    return relabel


@dataclass
class Config:
    """Configuration manager for gnk-cli."""

    relabel: dict[str, RelabelMode] = field(default_factory=lambda: dict(DEFAULT_RELABEL))
    reduce_phi: bool = True
    reduce_output: bool = False
    parallel_strand_checks: bool = False
    load_warning: str | None = None

    def __init__(self, config_or_config_file: str | dict[str, Any] = DEFAULT_CONFIG_FILE):
        self.load_warning = None
        # Accept either file path or direct config dict
        if isinstance(config_or_config_file, dict):
            self._config = config_or_config_file
        else:
            config_path = Path(config_or_config_file)
            if config_path.exists():
                try:
                    with open(config_path, "r") as f:
                        self._config = json.load(f)
                except Exception as e:
                    # Defaults apply; the CLI shows this in show-config and in traces.
                    self.load_warning = (
                        f"Could not load config file {config_or_config_file}: {e}"
                    )
                    self._config = {}
            else:
                self._config = {}

        self.relabel = _parse_relabel(self._config.get("relabel", {}))
        self.reduce_phi = bool(self._config.get("reduce_phi", True))
        self.reduce_output = bool(self._config.get("reduce_output", False))
        self.parallel_strand_checks = bool(self._config.get("parallel_strand_checks", False))

    def relabel_for(self, hom: str) -> RelabelMode:
        return self.relabel.get(hom, RelabelMode.PRESERVE)

    @override
    def __str__(self) -> str:
        modes = ", ".join(f"{hom}={mode.value}" for hom, mode in self.relabel.items())
        return (
            f"Config(relabel={{{modes}}}, reduce_phi={self.reduce_phi}, "
            f"reduce_output={self.reduce_output}, "
            f"parallel_strand_checks={self.parallel_strand_checks})"
        )


def load_config(
    config_file: str = DEFAULT_CONFIG_FILE,
    reduce_phi: bool | None = None,
    reduce_output: bool | None = None,
    parallel_strand_checks: bool | None = None,
) -> Config:
    """
    Load the configuration and apply command-line overrides.

    Args:
        config_file: path of the JSON config file; a missing file means defaults.
        reduce_phi: cancel adjacent equal letters in phi_n images.
        reduce_output: reduce group words before printing them.
        parallel_strand_checks: run Brunnian strand checks concurrently.

    Return:
        Config Object
    """
    config = Config(config_file)
    config.reduce_phi = bool(resolve_config_value(reduce_phi, config.reduce_phi))
    config.reduce_output = bool(resolve_config_value(reduce_output, config.reduce_output))
    config.parallel_strand_checks = bool(
        resolve_config_value(parallel_strand_checks, config.parallel_strand_checks)
    )
    return config


def resolve_config_value(
    cli_value: int | str | bool | None,
    config_value: int | str | bool | None,
) -> int | str | bool | None:
    """Resolve configuration value with priority: CLI > Config > Default."""
    if cli_value is not None:
        return cli_value

    if config_value is not None:
        return config_value

    return None
