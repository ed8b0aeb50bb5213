import os
from pathlib import Path

import pytest
from hypothesis import settings

# derandomized so every run draws the same examples
settings.register_profile("seeded", derandomize=True, max_examples=100, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "seeded"))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES
