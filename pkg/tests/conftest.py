import time
from contextlib import contextmanager

import pytest

from gisalg import fixtures

# One line per acceptance criterion, printed after the run; see the
# acceptance_line fixture below and tests/test_acceptance.py.
_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def chain3():
    return fixtures.chain(3)


@pytest.fixture(scope="session")
def loop1():
    return fixtures.loop1()


@pytest.fixture(scope="session")
def loopx():
    return fixtures.loopx()


@pytest.fixture(scope="session")
def loopxf():
    return fixtures.loopxf()


@pytest.fixture(scope="session")
def bouquet2():
    return fixtures.bouquet(2)


@pytest.fixture(scope="session")
def bouquet3():
    return fixtures.bouquet(3)


@pytest.fixture
def acceptance_line():
    """Record a PASS/FAIL summary line, and enforce the time budget."""

    @contextmanager
    def record(num, title, budget):
        t0 = time.perf_counter()
        status = "FAIL"
        try:
            yield
            dt = time.perf_counter() - t0
            if dt >= budget:
                raise AssertionError(
                    f"criterion {num} took {dt:.2f}s, budget {budget:g}s"
                )
            status = "PASS"
        finally:
            dt = time.perf_counter() - t0
            _ACCEPTANCE_LINES.append(
                f"{status} criterion {num}: {title} ({dt:.2f}s, budget {budget:g}s)"
            )

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
