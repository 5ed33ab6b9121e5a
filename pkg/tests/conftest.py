import pytest
from hypothesis import settings

from pbwdemazure.roots import LieType

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def T():
    return LieType.parse


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(mod.RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(r.line())
