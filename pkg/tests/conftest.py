import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from circprime import kernels  # noqa: E402

# Lines collected by test_acceptance, echoed in the terminal summary.
ACCEPTANCE_LINES = []


@pytest.fixture(params=kernels.backends())
def backend(request):
    return kernels.get_backend(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
