import sys
from pathlib import Path

import pytest

SMOKE_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(SMOKE_ROOT))


@pytest.fixture(scope="session")
def smoke_root() -> Path:
    return SMOKE_ROOT


@pytest.fixture(scope="session")
def generated_py(smoke_root) -> Path:
    return smoke_root.parent / "golden" / "py"


@pytest.fixture(scope="session")
def cases_dir(smoke_root) -> Path:
    return smoke_root / "cases"
