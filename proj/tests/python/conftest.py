import os
import shutil

import pytest


@pytest.fixture(scope="session")
def exe():
    path = os.environ.get("COLLABGAIN_EXE") or shutil.which("collabgain")
    if not path:
        pytest.skip("collabgain executable not found")
    return path
