from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def rational_matrices(draw, min_dim=2, max_dim=4, square=True):
    rows = draw(st.integers(min_dim, max_dim))
    cols = rows if square else draw(st.integers(1, max_dim))
    return [[draw(small_rationals) for _ in range(cols)] for _ in range(rows)]


# -- acceptance summary: one line per criterion

_acceptance: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    _acceptance.setdefault(marker.args[0], []).append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        results = _acceptance[n]
        passed = sum(o == "passed" for _, o in results)
        verdict = "PASS" if passed == len(results) else "FAIL"
        failed = [name for name, o in results if o != "passed"]
        tail = f"; failed: {', '.join(failed)}" if failed else ""
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  ({passed}/{len(results)} tests{tail})")
