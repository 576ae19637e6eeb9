import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tokfuzz.cli import BUNDLED_SEEDS  # noqa: E402,F401
from tokfuzz.preproc import preprocess_corpus  # noqa: E402


@pytest.fixture(scope="session")
def bundled():
    """Token map and encoded seeds for the bundled corpus."""
    return preprocess_corpus(BUNDLED_SEEDS, 0)


@pytest.fixture
def corpus(tmp_path):
    d = tmp_path / "corpus"
    preprocess_corpus(BUNDLED_SEEDS, 0, d)
    return d
