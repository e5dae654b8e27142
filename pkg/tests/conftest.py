import pytest

from chaindecomp import available_backends, build
from chaindecomp.oracle import fixture

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@pytest.fixture
def triangle():
    return fixture("triangle")


@pytest.fixture
def path3():
    return fixture("path3")


@pytest.fixture
def bowtie():
    return fixture("bowtie")


@pytest.fixture
def k4():
    return fixture("k4")


@pytest.fixture
def pendant():
    # triangle 0-1-2 with pendant vertex 3 hanging off vertex 0 via edge 3
    return fixture("triangle-pendant")


@pytest.fixture
def two_edges():
    return build(4, [(0, 1), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
