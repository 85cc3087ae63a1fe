import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

EXTENDED = os.environ.get("MAPCENSUS_EXTENDED") == "1"


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="extended suite; set MAPCENSUS_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


# lines recorded by the acceptance suite, repeated at the end of the run so
# they are visible without -s
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
