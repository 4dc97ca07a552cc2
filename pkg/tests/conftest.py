import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rankone import catalog, sweep  # noqa: E402
from rankone.wonderful import irreducible, variety_from_config  # noqa: E402

B4_FIXTURE = sweep.INDUCED_FIXTURES[0]


@pytest.fixture
def b4_induced():
    return variety_from_config(B4_FIXTURE)


@pytest.fixture
def case15():
    return irreducible(catalog.case_15())


def catalog_varieties():
    out = [irreducible(catalog.case_9b(n)) for n in range(2, 7)]
    out += [irreducible(catalog.case_9c(n)) for n in range(2, 7)]
    out.append(irreducible(catalog.case_15()))
    return out


def induced_varieties():
    return [variety_from_config(d) for d in sweep.INDUCED_FIXTURES]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.pytest_terminal_summary_lines():
        terminalreporter.write_line(line)
