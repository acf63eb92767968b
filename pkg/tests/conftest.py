import pytest
from hypothesis import HealthCheck, settings

from quandle_cocycles.io import load_cochain, load_expected, load_knot_table
from quandle_cocycles.tables import validated_knots

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def knots():
    return load_knot_table()


@pytest.fixture(scope="session")
def expected():
    return load_expected()


@pytest.fixture(scope="session")
def validated(knots, expected):
    return validated_knots(knots, expected)


@pytest.fixture(scope="session")
def r3_2cocycle():
    return load_cochain("builtin:r3-example2")


@pytest.fixture(scope="session")
def r3_3cocycle():
    return load_cochain("builtin:r3-example3")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
