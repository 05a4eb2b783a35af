from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from selfadj.algebra import DiffOperator, Poly

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SEED = 2024

small_ints = st.integers(min_value=-20, max_value=20)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=20))
nonzero_rationals = rationals.filter(bool)


def polys(max_degree=8):
    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree=8):
    return polys(max_degree).filter(bool)


def op_from(coeffs: dict) -> DiffOperator:
    return DiffOperator(coeffs)


_CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num = getattr(report, "criterion", None)
    if num is not None:
        _CRITERIA.setdefault(num, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        results = _CRITERIA[num]
        failed = [nid.split("::")[-1] for nid, outcome in results if outcome == "failed"]
        skipped = sum(outcome == "skipped" for _, outcome in results)
        passed = len(results) - len(failed) - skipped
        status = "PASS" if not failed and passed else "FAIL"
        line = f"criterion {num:2d}: {status} (exact, tolerance 0; {passed}/{len(results)} checks passed"
        line += f", {skipped} skipped)" if skipped else ")"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
