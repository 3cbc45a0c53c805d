import os

import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            num, text = value
            entry = _criteria.setdefault(num, [text, True])
            entry[1] = entry[1] and report.passed


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", tuple(mark.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, ok = _criteria[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture(scope="session")
def mp_oracle():
    """40-digit mpmath quadrature of int_{-1}^{1} f(x) exp(-alpha^2 (x-beta)^2) dx (or over [a, b])."""

    def run(f, alpha, beta, a=-1.0, b=1.0):
        with mpmath.workdps(40):
            pts = [a] + [p for p in (beta,) if a < p < b] + [b]
            g = lambda x: mpmath.mpf(f(float(x))) * mpmath.exp(-(alpha * (x - beta)) ** 2)
            return float(mpmath.quad(g, pts))

    return run
