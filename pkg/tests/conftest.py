from contextlib import contextmanager

import pytest

from qbruhat.cartan import build_cartan
from qbruhat.coordring import CoordinateModel
from qbruhat.weyl import WeylGroup

# outcome registry for the end-to-end checks; the terminal summary
# prints one line per recorded criterion
ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def criterion():
    @contextmanager
    def run(num, label):
        try:
            yield
        except BaseException:
            ACCEPTANCE_RESULTS[num] = (label, False)
            print("FAIL criterion %02d: %s" % (num, label))
            raise
        ACCEPTANCE_RESULTS[num] = (label, True)
        print("PASS criterion %02d: %s" % (num, label))

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        label, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(
            "%s criterion %02d: %s" % ("PASS" if ok else "FAIL", num, label))


@pytest.fixture(scope="session")
def a2_group():
    return WeylGroup.build(build_cartan("A2"))


@pytest.fixture(scope="session")
def b2_group():
    return WeylGroup.build(build_cartan("B2"))


@pytest.fixture(scope="session")
def a2_model():
    return CoordinateModel.get("A2")


@pytest.fixture(scope="session")
def b2_model():
    return CoordinateModel.get("B2")


@pytest.fixture(scope="session")
def a1_model():
    return CoordinateModel.get("A1")
