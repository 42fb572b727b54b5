# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

# pyright: reportExplicitAny=false
# pyright: reportAny=false

"""Trace recording of gnk-cli pipelines."""

import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Any

from .constants import TRACE_DIRECTORY


class TraceRecorder:
    """Records each stage of a command (input, maps, invariants, checks) to a JSON file."""

    def __init__(self, trace_path: str | None = None):
        """Initialize trace recorder.

        Args:
            trace_path: Path to save trace file. If None, generates default path.
        """
        if trace_path is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            trace_path = f"{TRACE_DIRECTORY}/trace_{timestamp}.json"

        self.trace_path: Path = Path(trace_path)
        self.trace_data: dict[str, Any] = {
            "command": "",
            "parameters": {},
            "input_word": None,
            "start_time": "",
            "end_time": "",
            "stages": [],
            "success": False,
            "final_result": None,
            "error": None,
            "execution_time": 0.0,
        }
        self._start_time: datetime | None = None
        self._last_stage_time: datetime | None = None

    def start_recording(
        self, command: str, parameters: dict[str, Any], input_word: str | None = None
    ) -> None:
        self._start_time = datetime.now()
        self._last_stage_time = self._start_time
        self.trace_data.update(
            {
                "command": command,
                "parameters": parameters,
                "input_word": input_word,
                "start_time": self._start_time.isoformat(),
                "stages": [],
            }
        )
        self.save_trace()

    def record_stage(self, name: str, parameters: dict[str, Any], output: str) -> None:
        """Record one pipeline stage and the time spent since the previous one.

        Args:
            name: Stage name, e.g. `psi` or `parity_w2`
            parameters: Labels and flags the stage ran with
            output: Serialized stage output
        """
        now = datetime.now()
        elapsed = (now - self._last_stage_time).total_seconds() if self._last_stage_time else 0.0
        self._last_stage_time = now
        self.trace_data["stages"].append(
            {
                "stage": name,
                "timestamp": now.isoformat(),
                "parameters": parameters,
                "output": output,
                "elapsed": elapsed,
            }
        )
        self.save_trace()

    def finalize_recording(
        self, success: bool, final_result: str | None = None, error: str | None = None
    ) -> None:
        end_time = datetime.now()
        self.trace_data.update(
            {
                "end_time": end_time.isoformat(),
                "success": success,
                "final_result": final_result,
                "error": error,
                "execution_time": (end_time - self._start_time).total_seconds()
                if self._start_time
                else 0.0,
            }
        )
        self.save_trace()

    def save_trace(self) -> None:
        """Save the current trace data to file."""
        try:
            self.trace_path.parent.mkdir(parents=True, exist_ok=True)

            with open(self.trace_path, "w", encoding="utf-8") as f:
                json.dump(self.trace_data, f, indent=2, ensure_ascii=False)

        except Exception as e:
            print(f"Warning: Failed to save trace to {self.trace_path}: {e}", file=sys.stderr)

    def get_trace_path(self) -> str:
        return str(self.trace_path)
