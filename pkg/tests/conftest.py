import os
import tempfile

import pytest


def pytest_configure(config):
    # keep the Macdonald table cache away from the user's home directory
    if "CHARVAR_CACHE_DIR" not in os.environ:
        os.environ["CHARVAR_CACHE_DIR"] = tempfile.mkdtemp(prefix="charvar-test-")


@pytest.fixture
def fresh_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CHARVAR_CACHE_DIR", str(tmp_path))
    return tmp_path
