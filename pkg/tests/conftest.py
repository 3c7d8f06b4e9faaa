import json
import sys
from pathlib import Path

import pytest

# Ensure local source is importable without editable install
ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from bh_lab.engine.toolkit import LabToolkit  # noqa: E402


@pytest.fixture(scope="session")
def toolkit():
    return LabToolkit()


@pytest.fixture(scope="session")
def norms(toolkit):
    return toolkit.norms


@pytest.fixture(scope="session")
def constants(toolkit):
    return toolkit.constants


@pytest.fixture(scope="session")
def interpolation(toolkit):
    return toolkit.interpolation


@pytest.fixture(scope="session")
def forms(toolkit):
    return toolkit.forms


@pytest.fixture(scope="session")
def reports(toolkit):
    return toolkit.reports


@pytest.fixture
def identity_file(tmp_path):
    path = tmp_path / "identity.json"
    path.write_text(json.dumps({"field": "real", "shape": [2, 2], "entries": [1, 0, 0, 1]}))
    return path
