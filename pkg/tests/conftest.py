from pathlib import Path

import pytest

from knowforge.vocab import bundled_model

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return REPO_ROOT


@pytest.fixture(scope="session")
def model():
    return bundled_model()
