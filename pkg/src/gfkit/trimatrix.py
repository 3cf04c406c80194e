"""Exact lower-triangular matrices and polynomial-entry triangles."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import SingularFactorization
from .pseries import as_fraction


class TriMatrix:
    """Lower-triangular N x N matrix with exact rational entries, 1-indexed."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence[object]]):
        rs = []
        for i, r in enumerate(rows, start=1):
            r = [as_fraction(x) for x in r]
            if len(r) < i:
                r = r + [Fraction(0)] * (i - len(r))
            if any(r[i:]):
                raise ValueError(f"row {i} has entries above the diagonal")
            rs.append(tuple(r[:i]))
        self._rows: tuple[tuple[Fraction, ...], ...] = tuple(rs)

    @classmethod
    def from_function(cls, entry: Callable[[int, int], object], N: int) -> "TriMatrix":
        return cls([[entry(n, k) for k in range(1, n + 1)] for n in range(1, N + 1)])

    @classmethod
    def identity(cls, N: int) -> "TriMatrix":
        return cls.from_function(lambda n, k: 1 if n == k else 0, N)

    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        n, k = nk
        if not (1 <= n <= self.size and k >= 1):
            raise IndexError((n, k))
        return self._rows[n - 1][k - 1] if k <= n else Fraction(0)

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self._rows[n - 1]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TriMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"TriMatrix(N={self.size})"

    def is_identity(self) -> bool:
        return all(x == (1 if k == n else 0) for n, r in enumerate(self._rows, 1) for k, x in enumerate(r, 1))

    def leading(self, N: int) -> "TriMatrix":
        return TriMatrix(self._rows[:N])

    def __matmul__(self, other: "TriMatrix") -> "TriMatrix":
        N = min(self.size, other.size)
        out = []
        for n in range(1, N + 1):
            a = self._rows[n - 1]
            row = []
            for k in range(1, n + 1):
                acc = Fraction(0)
                for j in range(k, n + 1):
                    x = a[j - 1]
                    if x:
                        acc += x * other._rows[j - 1][k - 1]
                row.append(acc)
            out.append(row)
        return TriMatrix(out)

    def apply(self, v: Sequence[object]) -> list[Fraction]:
        """Matrix times column vector v(1..N)."""
        vv = [as_fraction(x) for x in v]
        return [sum((a * vv[k] for k, a in enumerate(r) if a), Fraction(0)) for r in self._rows]

    def inverse(self) -> "TriMatrix":
        """Exact inverse by forward substitution."""
        N = self.size
        for n in range(1, N + 1):
            if self._rows[n - 1][n - 1] == 0:
                raise SingularFactorization(f"zero diagonal entry at {n}")
        inv: list[list[Fraction]] = []
        for n in range(1, N + 1):
            a = self._rows[n - 1]
            d = a[n - 1]
            row = [Fraction(0)] * n
            row[n - 1] = 1 / d
            for k in range(1, n):
                acc = Fraction(0)
                for j in range(k, n):
                    x = a[j - 1]
                    if x:
                        acc += x * inv[j - 1][k - 1]
                row[k - 1] = -acc / d
            inv.append(row)
        return TriMatrix(inv)

    def map(self, fn: Callable[[Fraction], object]) -> "TriMatrix":
        return TriMatrix([[fn(x) for x in r] for r in self._rows])

    def as_ints(self) -> list[list[int]]:
        if any(x.denominator != 1 for r in self._rows for x in r):
            raise ValueError("matrix has non-integer entries")
        return [[x.numerator for x in r] for r in self._rows]


def chain_inverse_entry(a: Callable[[int, int], object], n: int, k: int) -> Fraction:
    """Inverse entry (n, k) of a lower-triangular matrix by the signed chain sum.

    Sums over strictly increasing index chains k < i_1 < ... < i_m < n of
    products of subdiagonal entries divided by the diagonal entries met on
    the chain. Exponential in n - k, intended as an independent check.
    """
    if n == k:
        return 1 / as_fraction(a(n, n))
    if n < k:
        return Fraction(0)
    diag = {i: as_fraction(a(i, i)) for i in range(k, n + 1)}
    total = Fraction(0)
    inner = range(k + 1, n)
    for m in range(0, n - k):
        for chain in combinations(inner, m):
            path = (k,) + chain + (n,)
            prod = Fraction(1)
            for lo, hi in zip(path, path[1:]):
                prod *= as_fraction(a(hi, lo))
                if not prod:
                    break
            if not prod:
                continue
            den = Fraction(1)
            for i in path:
                den *= diag[i]
            total += (-1) ** (m + 1) * prod / den
    return total


# ------------------------------------------------------------------ polynomials in w


class Poly:
    """Polynomial in a single indeterminate w with exact rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[object] = ()):
        c = [as_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: object = 1) -> "Poly":
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __call__(self, w: object) -> Fraction:
        x = as_fraction(w)
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.c), len(other.c))
        a = self.c + (Fraction(0),) * (n - len(self.c))
        b = other.c + (Fraction(0),) * (n - len(other.c))
        return Poly(x + y for x, y in zip(a, b))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.c or not other.c:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return Poly(out)

    def scale(self, s: object) -> "Poly":
        x = as_fraction(s)
        return Poly(a * x for a in self.c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __bool__(self) -> bool:
        return bool(self.c)

    def __repr__(self) -> str:
        return " + ".join(f"{a}*w^{i}" for i, a in enumerate(self.c) if a) or "0"

    def to_str(self, var: str = "w") -> str:
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            coef = str(a)
            if mono and a == 1:
                coef = ""
            elif mono and a == -1:
                coef = "-"
            elif mono:
                coef = f"{coef}*"
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


class PolyMatrix:
    """Lower-triangular matrix of :class:`Poly` entries."""

    def __init__(self, rows: Iterable[Sequence[Poly]]):
        self._rows = tuple(tuple(r) for r in rows)

    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, nk: tuple[int, int]) -> Poly:
        n, k = nk
        return self._rows[n - 1][k - 1] if k <= n else Poly()

    def rows(self) -> list[list[Poly]]:
        return [list(r) for r in self._rows]

    def evaluate(self, w: object) -> TriMatrix:
        return TriMatrix([[p(w) for p in r] for r in self._rows])
