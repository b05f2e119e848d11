import pytest

from sopfr import average_series, build_table, to_log_points

FULL_LIMIT = 10_000_000


@pytest.fixture(scope="session")
def big_table():
    return build_table(FULL_LIMIT)


@pytest.fixture(scope="session")
def small_table():
    return build_table(1_000_000)


@pytest.fixture(scope="session")
def series(big_table):
    return average_series(big_table, 1, 3161)


@pytest.fixture(scope="session")
def points(series):
    return to_log_points(series)


ACCEPTANCE_LOG = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
