from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("gfkit", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("gfkit")

# Lines recorded by the acceptance tests, echoed in the terminal summary.
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def record():
    def _record(criterion: int, ok: bool, text: str) -> str:
        line = f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {text}"
        ACCEPTANCE_LINES[criterion] = line
        print(line)
        return line

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])


# Brute-force oracles shared by the module tests.  They avoid the library on purpose.


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    m, out, p = n, 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def omega(n: int) -> int:
    return sum(1 for p in range(2, n + 1) if n % p == 0 and all(p % r for r in range(2, p)))


def big_omega(n: int) -> int:
    count, p = 0, 2
    while n > 1:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    return count


def partitions(n: int, largest: int | None = None, parts=None) -> int:
    """Number of partitions of n into parts from ``parts`` (all positive integers by default)."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(partitions(n - k, k, parts) for k in range(1, min(n, largest) + 1) if parts is None or k in parts)


def distinct_partitions(n: int, largest: int | None = None) -> int:
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(distinct_partitions(n - k, k - 1) for k in range(1, min(n, largest) + 1))


def dirichlet(f, g, n: int) -> Fraction:
    return sum((Fraction(f(d)) * Fraction(g(n // d)) for d in divisors(n)), Fraction(0))


def inverse_by_solving(h, N: int) -> list[Fraction]:
    """h^{-1}(1..N) from h * h^{-1} = eps, solved term by term."""
    inv = [Fraction(0)] * (N + 1)
    inv[1] = 1 / Fraction(h(1))
    for n in range(2, N + 1):
        inv[n] = -sum((Fraction(h(n // d)) * inv[d] for d in divisors(n) if d < n), Fraction(0)) / Fraction(h(1))
    return inv[1:]


def lower_inverse(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a lower-triangular matrix by Gauss-Jordan on full rows."""
    n = len(rows)
    A = [[Fraction(rows[i][j]) if j <= i else Fraction(0) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        piv = A[i][i]
        A[i] = [x / piv for x in A[i]]
        for r in range(n):
            if r != i and A[r][i]:
                c = A[r][i]
                A[r] = [x - c * y for x, y in zip(A[r], A[i])]
    return [[A[i][n + j] for j in range(i + 1)] for i in range(n)]
