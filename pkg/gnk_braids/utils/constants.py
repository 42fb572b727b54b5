# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

DEFAULT_CONFIG_FILE = "gnk_config.json"

TRACE_DIRECTORY = "traces"
