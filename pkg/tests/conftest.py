import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "covbound", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "covbound"))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
