import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("LATTICE_GAP_FULL_SWEEP") == "1":
        return
    skip = pytest.mark.skip(reason="set LATTICE_GAP_FULL_SWEEP=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
