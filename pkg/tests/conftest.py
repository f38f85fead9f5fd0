import os

import pytest

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(scope="session")
def external_data():
    return os.path.join(REPO_ROOT, "external-data")
