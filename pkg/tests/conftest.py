import pytest

ACCEPTANCE_RESULTS = []


@pytest.fixture
def record_criterion():
    def record(name, passed, detail=""):
        ACCEPTANCE_RESULTS.append((name, passed, detail))

    return record


@pytest.fixture
def six():
    from roughspan import InformationSystem

    return InformationSystem.from_rows(
        [1, 2, 3, 4, 5, 6], ["a"], [["x"], ["x"], ["y"], ["y"], ["z"], ["z"]]
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
