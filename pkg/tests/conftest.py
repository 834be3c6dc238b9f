from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from lcdt.galois import field_create

settings.register_profile(
    "lcdt",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lcdt")


@pytest.fixture
def F4():
    return field_create(2, 2, modulus=[1, 1, 1])


@pytest.fixture
def F8():
    return field_create(2, 3, modulus=[1, 1, 0, 1])


@pytest.fixture
def F9():
    return field_create(3, 2, modulus=[2, 2, 1])


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
