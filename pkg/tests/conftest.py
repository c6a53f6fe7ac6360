import pytest

# One line per acceptance criterion, echoed after the test summary so the
# final report carries an explicit verdict for every numbered check.
_CRITERION_LINES = []


@pytest.fixture
def criterion_log():
    def _record(line: str):
        _CRITERION_LINES.append(line)
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)
