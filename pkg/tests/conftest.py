import pytest

CRITERIA = []


def pytest_addoption(parser):
    parser.addoption("--skip-optional", action="store_true", help="skip the long a = 8 character check")


@pytest.fixture
def skip_optional(request):
    return request.config.getoption("--skip-optional")


@pytest.fixture
def criterion():
    def record(number, ok, detail):
        CRITERIA.append((number, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(CRITERIA, key=lambda c: c[0]):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
