import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SUPERPAT_LONGRUN") == "1":
        return
    skip = pytest.mark.skip(reason="long-running; set SUPERPAT_LONGRUN=1")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
