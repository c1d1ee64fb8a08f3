import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Callable that records one PASS/FAIL line for the acceptance summary."""
    lines = request.config.stash[_LINES]

    def record(num, title, ok, elapsed, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} ({elapsed:.2f}s)"
        if detail:
            line += f" - {detail}"
        lines.append(line)
        return line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
