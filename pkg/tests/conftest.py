import numpy as np
import pytest

from spinchannel.spin import SpinParams

ACCEPTANCE_LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}" + (f" -- {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


FIG1 = SpinParams(J=1.0, delta_z=1.0, D_z=1.0, K_z=5.0, B=1.0, T=1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def bell():
    psi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    return np.outer(psi, psi).astype(complex)


def random_spin_params(rng) -> SpinParams:
    j, dz, d, k, b = rng.uniform(-10, 10, size=5)
    return SpinParams(J=j, delta_z=dz, D_z=d, K_z=k, B=b, T=rng.uniform(0.05, 20))
