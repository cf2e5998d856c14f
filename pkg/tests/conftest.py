import numpy as np
import pytest

from softhybrid.dataset import load_fixture

TOL = 1e-9

_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marks = getattr(report, "criterion", None)
    if marks is None:
        return
    number, title = marks
    _criteria.setdefault(number, (title, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def paper():
    return load_fixture("paper.json")


@pytest.fixture(scope="session")
def depth_ws():
    return load_fixture("depth.json")


def close(a, b, tol=TOL):
    return all(abs(x - y) <= tol for x, y in zip(a, b, strict=True))


def dense_close(d1, d2, tol=TOL):
    """Two DenseSets agree on spaces, variant and every grade."""
    return (
        d1.universe == d2.universe
        and d1.pspace == d2.pspace
        and d1.variant == d2.variant
        and np.allclose(d1.param_row, d2.param_row, atol=tol, rtol=0)
        and np.allclose(d1.value_grid, d2.value_grid, atol=tol, rtol=0)
    )
