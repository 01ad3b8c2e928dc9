import pytest

_LINES: list[str] = []


@pytest.fixture
def report_line():
    """Record a one-line criterion verdict; all verdicts are echoed at session end."""

    def emit(line: str) -> None:
        print(line)
        _LINES.append(line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
