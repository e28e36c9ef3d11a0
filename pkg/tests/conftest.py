from fractions import Fraction as F

import pytest

from tropproj.arith import PrimeContext, UniPoly
from tropproj.driver import Instance
from tropproj.shapegb import ShapeBasis

# 2-adic worked example: f3 = 2 + x + x^2 + x^3 + 2x^4, x2 = 2*x3, x1 = 4*x3
F3 = UniPoly([2, 1, 1, 1, 2])
F1P = UniPoly([F(-1, 8), F(-1, 8), F(-3, 8), F(1, 4)])
F1PP = UniPoly([-1, -1, -3, 2])
RES1 = UniPoly([F(1, 2), F(3, 4), F(7, 2), 3, 8])
RES2 = UniPoly([2048, 384, 224, 24, 8])


@pytest.fixture
def p2():
    return PrimeContext(2)


@pytest.fixture
def example_basis():
    return ShapeBasis(F3, (UniPoly([0, 4]), UniPoly([0, 2])))


@pytest.fixture
def example_instance(example_basis):
    return Instance(example_basis, PrimeContext(2))


# -- acceptance summary -------------------------------------------------------

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    item_marker = getattr(report, "criterion", None)
    if item_marker and (report.when == "call" or report.outcome != "passed"):
        num, title = item_marker
        prev = _criteria.get(num, (title, "PASS"))[1]
        status = "PASS" if report.passed and prev == "PASS" else "FAIL"
        _criteria[num] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=int):
        title, status = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
