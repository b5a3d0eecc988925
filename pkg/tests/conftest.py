import os
from importlib import resources
from pathlib import Path

import numpy as np
import pytest

from cointkit import load_csv

SYNTHETIC = Path(resources.files("cointkit") / "data" / "synthetic.csv")


@pytest.fixture(scope="session")
def synthetic_path():
    return SYNTHETIC


@pytest.fixture(scope="session")
def synthetic(synthetic_path):
    return load_csv(synthetic_path)


@pytest.fixture(scope="session")
def replication_data():
    """The replication archive export, if COINTKIT_DATA points at it."""
    path = os.environ.get("COINTKIT_DATA")
    if not path or not Path(path).is_file():
        pytest.skip(
            "replication archive not available: export doi:10.7910/DVN/68B17U to CSV "
            "and set COINTKIT_DATA to run the empirical checks"
        )
    return load_csv(path)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
