import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from crtbch.bch import bch_build  # noqa: E402

# (t, delta) codes used for cross-checks: t in {4, 5, 6, 11}
MATRIX = [(4, 7), (5, 7), (6, 11), (11, 23)]


@pytest.fixture(scope="session")
def ex1():
    return bch_build(4, 7)


@pytest.fixture(scope="session")
def ex2():
    return bch_build(11, 23)


@pytest.fixture(scope="session")
def ex3():
    return bch_build(13, 79)


@pytest.fixture(scope="session", params=MATRIX, ids=lambda p: f"t{p[0]}d{p[1]}")
def matrix_code(request):
    return bch_build(*request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line, _, _ in mod.RESULTS:
        terminalreporter.write_line(line)
