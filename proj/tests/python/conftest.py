import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema_dir():
    return pathlib.Path(os.environ.get("QVBS_SCHEMAS", ROOT / "schemas"))


@pytest.fixture(scope="session")
def cli_binary():
    path = os.environ.get("QVBS_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("QVBS_CLI not set")
    return path
