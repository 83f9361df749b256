"""Print one pass/fail line per acceptance criterion after the run."""
from collections import defaultdict

import pytest

SUITE_TYPES = ("cAx/4", "cAx/2", "cD/3-1", "cD/3-2", "cD/3-3", "cD/2-1", "cD/2-2", "cE/2")
SUITE_SIZE = 200
SUITE_SEED = 2024

_OUTCOMES = defaultdict(list)
_TITLES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            number, title = mark.args
            _TITLES[number] = title
            item.user_properties.append(("criterion", number))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.outcome != "passed":
        _OUTCOMES[props["criterion"]].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _TITLES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_TITLES):
        outcomes = _OUTCOMES.get(number, [])
        ok = bool(outcomes) and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {_TITLES[number]}")


@pytest.fixture(scope="session")
def random_suite():
    """The fixed-seed randomized instances and their analyses, shared by the
    acceptance criteria that use them."""
    from terminal_divisors.analysis import analyze
    from terminal_divisors.generators import random_instances
    out = {}
    for tag in SUITE_TYPES:
        insts = random_instances(tag, SUITE_SIZE, seed=SUITE_SEED)
        out[tag] = [(inst, analyze(inst)) for inst in insts]
    return out
