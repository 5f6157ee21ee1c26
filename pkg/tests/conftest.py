import os
import random

import pytest


@pytest.fixture
def rng():
    """Deterministic RNG for property tests; override via PENTASERIES_SEED."""
    return random.Random(int(os.environ.get("PENTASERIES_SEED", "20260817")))
