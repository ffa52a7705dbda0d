import pytest

from coact import kernels
from coact.constructions import brandt, cyclic_group, trivial_monoid, u2


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    """Run the test once per available closure kernel."""
    previous = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


@pytest.fixture
def b12():
    """B({1};{1,2})^1."""
    return brandt(trivial_monoid(), [1, 2])


@pytest.fixture
def bz2():
    """B(Z2;{1,2})^1."""
    return brandt(cyclic_group(2), [1, 2])


@pytest.fixture
def U2():
    return u2()


@pytest.fixture
def Z2():
    return cyclic_group(2)


_ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance_log():
    """Collects one pass/fail line per acceptance criterion for the terminal summary."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
