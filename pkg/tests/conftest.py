import functools
import time

import pytest

from laplace_cycles.generate import generate_cycle, make_rng
from laplace_cycles.nets import NetWindow

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}
SUITE_BUDGET = 300.0

WINDOW_5 = NetWindow(0, 4, 0, 4)

_started = time.perf_counter()


@functools.lru_cache(maxsize=None)
def cycle_for_seed(seed: int, window: NetWindow = WINDOW_5):
    return generate_cycle(make_rng(seed), window)


@pytest.fixture
def rng():
    return make_rng(20240601)


@pytest.fixture(scope="session")
def cycle5():
    return cycle_for_seed(1)


def _suite_seconds() -> float:
    return time.perf_counter() - _started


def pytest_sessionfinish(session, exitstatus):
    if 12 in ACCEPTANCE_RESULTS:
        ok, detail = ACCEPTANCE_RESULTS[12]
        elapsed = _suite_seconds()
        ACCEPTANCE_RESULTS[12] = (ok and elapsed < SUITE_BUDGET, f"{detail}; full suite {elapsed:.1f} s")
        if elapsed >= SUITE_BUDGET and session.exitstatus == 0:
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
