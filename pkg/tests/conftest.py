import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, passed: bool, seconds: float, bound: float, detail: str = ""):
        status = "PASS" if passed and seconds < bound else "FAIL"
        ACCEPTANCE_LINES[number] = f"[{status}] criterion {number:2d}: {name} ({seconds:.2f}s, bound {bound:g}s) {detail}".rstrip()

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
