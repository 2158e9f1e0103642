import functools

import pytest

from cubecover.cube import Params
from cubecover.solver import build_incidence, solve_min_cover

ACCEPTANCE_LOG = []


@functools.lru_cache(maxsize=None)
def solve(n, d, l):
    return solve_min_cover(build_incidence(Params(n, d, l)))


@pytest.fixture
def solved():
    return solve


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail, elapsed in sorted(ACCEPTANCE_LOG):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({elapsed:.1f}s) {detail}")
