import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))             # oracles.py

ROOT = pathlib.Path(__file__).resolve().parent.parent
DESCRIPTORS = ROOT / "demos" / "descriptors"


@pytest.fixture(scope="session")
def descriptor_dir():
    return DESCRIPTORS


def descriptor_path(name):
    return DESCRIPTORS / f"{name}.json"
