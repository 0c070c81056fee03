import pytest

from semiform import parse_polynomial

# transcribed term by term from the two displayed weight-6 semi-invariants of
# the binary quartic
I1_TEXT = "3a_1^2 a_2^2 - 4a_1^3 a_3 - 2a_0 a_1 a_2 a_3 + 3a_0^2 a_3^2 + 4a_0a_1^2a_4 - 4a_0^2a_2a_4"
I2_TEXT = "a_0 a_2^3 - 2a_0 a_1 a_2 a_3 + a_0^2 a_3^2 + a_0 a_1^2 a_4 - a_0^2 a_2 a_4"


@pytest.fixture
def I1():
    return parse_polynomial(I1_TEXT, 4)


@pytest.fixture
def I2():
    return parse_polynomial(I2_TEXT, 4)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
