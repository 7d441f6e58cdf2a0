import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from spreadbent.construct import theorem_main  # noqa: E402
from spreadbent.gf import make_field  # noqa: E402


@pytest.fixture(scope="session")
def f64():
    return make_field(6)


@pytest.fixture(scope="session")
def f16():
    return make_field(4)


@pytest.fixture(scope="session")
def main_pair(f64):
    return theorem_main(f64, 2, "f1"), theorem_main(f64, 2, "f2")


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS, key=lambda s: int(s[2:])):
        terminalreporter.write_line(RESULTS[name])
