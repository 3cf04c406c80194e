"""Exact truncated power series and the partition generating functions built on them."""

from __future__ import annotations

import enum
import json
import threading
from fractions import Fraction
from math import isqrt, lcm
from typing import Callable, Iterable, Sequence, Union

from .errors import CompositionError, InvalidExponent, ZeroConstantTerm

Number = Union[int, Fraction]


def as_fraction(x: object) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))  # type: ignore[attr-defined]
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _int_convolve(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    nzb = [(j, bj) for j, bj in enumerate(b[: order + 1]) if bj]
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        lim = order - i
        for j, bj in nzb:
            if j > lim:
                break
            out[i + j] += ai * bj
    return out


def _scaled_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class Series:
    """Power series in q known exactly through ``q**order``.

    Arithmetic between series of different orders truncates to the smaller
    order, so every reported coefficient is exact.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[object], order: int | None = None):
        c = [as_fraction(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            c = (c + [Fraction(0)] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c: tuple[Fraction, ...] = tuple(c)

    # constructors -----------------------------------------------------
    @classmethod
    def _from_fracs(cls, coeffs: Sequence[Fraction]) -> "Series":
        s = object.__new__(cls)
        s._c = tuple(coeffs)
        return s

    @classmethod
    def from_ints(cls, coeffs: Sequence[int]) -> "Series":
        return cls._from_fracs([Fraction(int(x)) for x in coeffs])

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls._from_fracs([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: object = 1) -> "Series":
        c = [Fraction(0)] * (order + 1)
        if 0 <= k <= order:
            c[k] = as_fraction(coeff)
        return cls._from_fracs(c)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int, start: int = 0) -> "Series":
        """Series with ``[q^n] = fn(n)`` for ``start <= n <= order`` and zero below."""
        return cls._from_fracs([Fraction(0)] * start + [as_fraction(fn(n)) for n in range(start, order + 1)])

    # basic access -------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient q^{n} is beyond the truncation order {self.order}")
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = [f"({c})*q^{n}" for n, c in enumerate(self._c) if c]
        return f"Series({' + '.join(terms) or '0'} + O(q^{self.order + 1}))"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def as_ints(self) -> list[int]:
        """Integer coefficients; raises if any coefficient is not an integer."""
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self._c]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series._from_fracs(self._c[: order + 1])

    def valuation(self) -> int | None:
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    # arithmetic -------------------------------------------------------
    def _coerce(self, other: object) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.monomial(0, self.order, as_fraction(other))

    def __add__(self, other: object) -> "Series":
        o = self._coerce(other)
        n = min(self.order, o.order)
        return Series._from_fracs([self._c[i] + o._c[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._from_fracs([-c for c in self._c])

    def __sub__(self, other: object) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "Series":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "Series":
        if not isinstance(other, Series):
            x = as_fraction(other)
            return Series._from_fracs([c * x for c in self._c])
        n = min(self.order, other.order)
        a, da = _scaled_ints(self._c[: n + 1])
        b, db = _scaled_ints(other._c[: n + 1])
        prod = _int_convolve(a, b, n)
        den = da * db
        if den == 1:
            return Series.from_ints(prod)
        return Series._from_fracs([Fraction(v, den) for v in prod])

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Series":
        if isinstance(other, Series):
            return self * other.recip()
        return self * (1 / as_fraction(other))

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.recip() ** (-k)
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by ``q**k`` (k >= 0) keeping the same order."""
        if k < 0:
            raise ValueError("use divide_q for negative shifts")
        return Series._from_fracs(([Fraction(0)] * k + list(self._c))[: self.order + 1])

    def divide_q(self, k: int) -> "Series":
        """Divide by ``q**k``; the first k coefficients must vanish. Order drops by k."""
        if any(self._c[:k]):
            raise ValueError(f"series is not divisible by q^{k}")
        if k > self.order:
            raise ValueError("division leaves no known coefficients")
        return Series._from_fracs(self._c[k:])

    def recip(self) -> "Series":
        """Multiplicative inverse, exact through the same order."""
        a0 = self._c[0]
        if a0 == 0:
            raise ZeroConstantTerm("series has zero constant term")
        n = self.order
        if self.is_integral() and a0 in (1, -1):
            a = [c.numerator for c in self._c]
            s = a[0]
            nz = [(i, a[i]) for i in range(1, n + 1) if a[i]]
            b = [0] * (n + 1)
            b[0] = s
            for m in range(1, n + 1):
                acc = 0
                for i, ai in nz:
                    if i > m:
                        break
                    acc += ai * b[m - i]
                b[m] = -s * acc
            return Series.from_ints(b)
        inv0 = 1 / a0
        nz = [(i, self._c[i]) for i in range(1, n + 1) if self._c[i]]
        b = [Fraction(0)] * (n + 1)
        b[0] = inv0
        for m in range(1, n + 1):
            acc = Fraction(0)
            for i, ai in nz:
                if i > m:
                    break
                acc += ai * b[m - i]
            b[m] = -inv0 * acc
        return Series._from_fracs(b)

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` for q. ``inner`` must have zero constant term."""
        if inner._c[0] != 0:
            raise CompositionError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = Series.zero(n)
        power = Series.one(n)
        inner_t = inner.truncate(n)
        for k in range(n + 1):
            if self._c[k]:
                result = result + power * self._c[k]
            power = power * inner_t
        return result

    def derivative(self) -> "Series":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            return Series.zero(0)
        return Series._from_fracs([k * self._c[k] for k in range(1, self.order + 1)])

    def exp(self) -> "Series":
        """exp of a series with zero constant term."""
        if self._c[0] != 0:
            raise CompositionError("exp needs zero constant term for an exact result")
        n = self.order
        ka = [k * self._c[k] for k in range(n + 1)]
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1)
        for m in range(1, n + 1):
            b[m] = sum((ka[k] * b[m - k] for k in range(1, m + 1) if ka[k]), Fraction(0)) / m
        return Series._from_fracs(b)

    def log(self) -> "Series":
        """log of a series with constant term 1."""
        if self._c[0] != 1:
            raise CompositionError("log needs constant term 1")
        n = self.order
        d = Series._from_fracs([k * self._c[k] for k in range(n + 1)])
        q = d * self.recip()
        return Series._from_fracs([Fraction(0)] + [q._c[k] / k for k in range(1, n + 1)])

    # serialization ----------------------------------------------------
    def to_json(self) -> str:
        return json.dumps({"order": self.order, "coeffs": [_fmt_q(c) for c in self._c]})

    @classmethod
    def from_json(cls, text: str) -> "Series":
        obj = json.loads(text)
        s = cls([Fraction(x) for x in obj["coeffs"]])
        if s.order != int(obj["order"]):
            raise ValueError("order does not match the coefficient count")
        return s


def _fmt_q(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def series_arith(a: Series, b: Series | None, op: str) -> Series:
    """Dispatch ``op`` in {add, sub, mul, recip}; recip ignores ``b``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op in ("recip", "recip-of-a"):
        return a.recip()
    raise ValueError(f"unknown series operation {op!r}")


def pochhammer(a: int, b: int, sign: str, N: int) -> Series:
    """The product of ``(1 - q^(a+m*b))`` (sign '-') or ``(1 + q^(a+m*b))`` (sign '+') over m >= 0."""
    if a < 1 or b < 1:
        raise ValueError("pochhammer needs a, b >= 1")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    s = 1 if sign == "+" else -1
    c = [0] * (N + 1)
    c[0] = 1
    e = a
    while e <= N:
        for n in range(N, e - 1, -1):
            c[n] += s * c[n - e]
        e += b
    return Series.from_ints(c)


def pentagonal_index(j: int) -> int:
    """Interleaved generalized pentagonal number G_j: 0, 1, 2, 5, 7, 12, 15, ..."""
    h = (j + 1) // 2
    return h * ((3 * j + 2) // 2) // 2


def pentagonal_sign(j: int) -> int:
    return -1 if ((j + 1) // 2) % 2 else 1


def pentagonal_terms(N: int) -> list[tuple[int, int]]:
    """Pairs (G_j, sign) with G_j <= N in increasing order."""
    out = []
    j = 0
    while True:
        g = pentagonal_index(j)
        if g > N:
            return out
        out.append((g, pentagonal_sign(j)))
        j += 1


def pentagonal_series(N: int) -> Series:
    c = [0] * (N + 1)
    for g, s in pentagonal_terms(N):
        c[g] = s
    return Series.from_ints(c)


class PartitionKind(enum.Enum):
    P = "P"
    PHAT = "PHAT"
    Q = "Q"
    QBIG = "QBIG"
    P1 = "P1"
    P2 = "P2"


class _PartitionTables:
    """Grow-on-demand integer tables for every partition kind."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._p: list[int] = [1]
        self._other: dict[PartitionKind, list[int]] = {}

    def p_prefix(self, n: int) -> list[int]:
        if n < len(self._p):
            return self._p
        with self._lock:
            p = self._p
            for m in range(len(p), n + 1):
                acc = 0
                for g, s in pentagonal_terms(m)[1:]:
                    acc -= s * p[m - g]
                p.append(acc)
            return p

    def other(self, kind: PartitionKind, n: int) -> list[int]:
        tab = self._other.get(kind)
        if tab is not None and len(tab) > n:
            return tab
        with self._lock:
            size = max(2 * n, 64)
            if kind is PartitionKind.PHAT:
                tab = pentagonal_series(size).as_ints()
            elif kind is PartitionKind.P1:
                tab = pochhammer(1, 1, "+", size).as_ints()
            elif kind in (PartitionKind.P2, PartitionKind.QBIG):
                # signed count by parity of the number of parts
                tab = pochhammer(1, 1, "+", size).recip().as_ints()
            elif kind is PartitionKind.Q:
                tab = pochhammer(1, 2, "+", size).as_ints()
            else:  # pragma: no cover
                raise ValueError(kind)
            self._other[kind] = tab
            return tab


_TABLES = _PartitionTables()


def partition(kind: PartitionKind | str, n: int) -> int:
    """Partition-type counts; negative n gives 0."""
    if isinstance(kind, str):
        kind = PartitionKind(kind.upper())
    if n < 0:
        return 0
    if kind is PartitionKind.P:
        return _TABLES.p_prefix(n)[n]
    return _TABLES.other(kind, n)[n]


def partitions_list(kind: PartitionKind | str, N: int) -> list[int]:
    """Values of ``partition(kind, n)`` for 0 <= n <= N."""
    if isinstance(kind, str):
        kind = PartitionKind(kind.upper())
    if kind is PartitionKind.P:
        return list(_TABLES.p_prefix(N)[: N + 1])
    return list(_TABLES.other(kind, N)[: N + 1])


def theta3_power(k: int, N: int) -> Series:
    """theta_3(q)^k whose coefficients count representations as sums of k squares."""
    if k < 1:
        raise ValueError("k must be positive")
    t = [0] * (N + 1)
    t[0] = 1
    for m in range(1, isqrt(N) + 1):
        t[m * m] = 2
    return Series.from_ints(t) ** k


def lambert_series(f: Callable[[int], object], N: int) -> Series:
    """Sum of f(n) q^n / (1 - q^n), i.e. coefficients (f * 1)(n)."""
    c = [Fraction(0)] * (N + 1)
    for d in range(1, N + 1):
        v = as_fraction(f(d))
        if v:
            for m in range(d, N + 1, d):
                c[m] += v
    return Series._from_fracs(c)


def generalized_lambert(
    f: Callable[[int], object],
    alpha: int,
    beta: int,
    gamma: int | None = None,
    delta: int | None = None,
    *,
    N: int,
) -> Series:
    """Generalized Lambert series truncated at order N.

    With all four parameters the terms are ``f(n) q^(alpha n + beta) / (1 - q^(gamma n + delta))``.
    With ``gamma`` and ``delta`` omitted the classical two-parameter form
    ``f(n) q^(alpha n - beta) / (1 - q^(alpha n - beta))`` is used, whose
    coefficient of q^m is the sum of f(d) over d with ``alpha d - beta | m``.
    """
    if (gamma is None) != (delta is None):
        raise ValueError("give both gamma and delta or neither")
    if gamma is None:
        alpha, beta, gamma, delta = alpha, -beta, alpha, -beta
    if alpha < 1:
        raise InvalidExponent("alpha must be positive for a finite truncation")
    c = [Fraction(0)] * (N + 1)
    n = 1
    while alpha * n + beta <= N:
        e = alpha * n + beta
        step = gamma * n + delta
        if e < 1 or step < 1:
            raise InvalidExponent(f"term n={n} has exponents ({e}, {step})")
        v = as_fraction(f(n))
        if v:
            for m in range(e, N + 1, step):
                c[m] += v
        n += 1
    return Series._from_fracs(c)
