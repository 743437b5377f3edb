import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

finite = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)
cvec3 = st.tuples(cplx, cplx, cplx)
rvec3 = st.tuples(finite, finite, finite)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        marks = [k for k in report.keywords if k.startswith("test_criterion_")]
        if marks:
            _CRITERIA[marks[0]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        n = int(name.split("_")[2])
        status = "PASS" if _CRITERIA[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  ({name})")
