import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from dvfreduce import fixtures  # noqa: E402
from dvfreduce.gf2core import from_rows  # noqa: E402
from strategies import WORKED_EXAMPLE  # noqa: E402


@pytest.fixture
def worked():
    return from_rows(WORKED_EXAMPLE)


@pytest.fixture
def fixture_path():
    return lambda name: str(fixtures.path(name))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
