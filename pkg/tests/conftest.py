import cmath
import math

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# (criterion, passed, detail) lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append((name, bool(ok), detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name:<44} {detail}")


def polar(r: float, phase: float) -> complex:
    return cmath.rect(r, phase)


GENERIC = dict(a=polar(0.83, 0.7), b=polar(1.37, -1.9), q=polar(0.93, 0.45), p=polar(0.21, 2.3))


@pytest.fixture
def ep():
    from lucas_elliptica.elliptic import EllipticParams

    return EllipticParams(**GENERIC)


def close(x, y, tol):
    """Symmetric relative closeness, the same form the library uses."""
    return abs(x - y) / (abs(x) + abs(y) + 1.0) <= tol


def isfinite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)
