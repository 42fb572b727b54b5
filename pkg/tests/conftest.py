# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")
