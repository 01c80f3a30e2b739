from __future__ import annotations

import numpy as np
import pytest

from hopfq.sampling import random_product, random_qubit, random_two_qubit


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def two_qubit_states(rng):
    return [random_two_qubit(rng) for _ in range(500)]


@pytest.fixture
def product_states(rng):
    return [random_product(rng) for _ in range(200)]


@pytest.fixture
def qubit_states(rng):
    return [random_qubit(rng) for _ in range(500)]


ACCEPTANCE: dict[int, str] = {}


class Criterion:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.lines: list[str] = []
        self.ok = True
        self.finished = False

    def check(self, what: str, measured: float, bound: float, *, at_least: bool = False) -> None:
        passed = measured >= bound if at_least else measured <= bound
        rel = ">=" if at_least else "<="
        self.lines.append(f"{what}: {measured:.3e} {rel} {bound:.0e}")
        self.ok &= bool(passed)

    def require(self, what: str, passed: bool) -> None:
        self.lines.append(f"{what}: {'ok' if passed else 'FAILED'}")
        self.ok &= bool(passed)

    def verdict(self) -> None:
        self.finished = True
        assert self.ok, "; ".join(self.lines)


@pytest.fixture
def criterion(request):
    number = request.node.get_closest_marker("criterion").args[0]
    c = Criterion(number, request.node.get_closest_marker("criterion").args[1])
    ACCEPTANCE[number] = f"criterion {number:2d} FAIL  {c.title} (did not finish)"
    yield c
    if not c.finished:
        c.ok = False
        c.lines.append("raised before reaching a verdict")
    status = "PASS" if c.ok else "FAIL"
    ACCEPTANCE[number] = f"criterion {number:2d} {status}  {c.title}; " + "; ".join(c.lines)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
