import pytest

from euclidkemeny._backend import available_backends

from helpers import ACCEPTANCE_RESULTS


@pytest.fixture(params=sorted(available_backends()))
def kernels(request):
    return available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
