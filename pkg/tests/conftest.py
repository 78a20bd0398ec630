import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(number, ok, detail)."""

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        print(line)
        _LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def _shipped(name):
    from importlib import resources

    from cliffinv.codes import parse_code

    return parse_code(resources.files("cliffinv").joinpath("data").joinpath(name).read_text())


@pytest.fixture(scope="session")
def g11():
    return _shipped("g11.txt")


@pytest.fixture(scope="session")
def g44():
    return _shipped("g44.txt")


@pytest.fixture(scope="session")
def g66():
    return [_shipped("g66a.txt"), _shipped("g66b.txt")]
