import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qillume.assembly import ChannelParams  # noqa: E402


@pytest.fixture
def channel():
    return ChannelParams(kappa=0.01, n_bath=1.0)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
