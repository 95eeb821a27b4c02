import sys

import pytest

from coregroup.corpus import load_all


@pytest.fixture(scope="session")
def corpus():
    return load_all()


@pytest.fixture(scope="session")
def trefoil(corpus):
    return corpus["spun_trefoil"]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        status, detail = RESULTS[key]
        terminalreporter.write_line(f"[{status}] criterion {key}: {detail}")
