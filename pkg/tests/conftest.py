import pytest

from eigendist.modforms import QExpansion, delta_qexpansion, times_eisenstein

# Index 121 = 11**2 is the deepest coefficient any test needs.
PRECISION = 130

ACCEPTANCE_RESULTS = []


def naive_delta(M):
    """q * prod_{n<=M} (1 - q^n)^24 by plain repeated multiplication."""
    series = [1] + [0] * M
    for n in range(1, M + 1):
        for _ in range(24):
            # multiply by (1 - q^n) in place, high degrees first
            for i in range(M, n - 1, -1):
                series[i] -= series[i - n]
    return [0] + series[:M]


def naive_e4(M):
    return [1] + [240 * sum(d ** 3 for d in range(1, n + 1) if n % d == 0) for n in range(1, M + 1)]


def naive_mul(a, b, M):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(M + 1)]


@pytest.fixture(scope="session")
def delta():
    return delta_qexpansion(PRECISION)


@pytest.fixture(scope="session")
def e4_delta(delta):
    return times_eisenstein(delta, 5, eigenform=True)


@pytest.fixture(scope="session")
def delta_oracle():
    return naive_delta(PRECISION)


@pytest.fixture(scope="session")
def e4_delta_oracle(delta_oracle):
    return naive_mul(delta_oracle, naive_e4(PRECISION), PRECISION)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {label}")
