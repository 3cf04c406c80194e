"""Arithmetic functions and the Dirichlet / unitary convolution algebra."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Sequence, Union

from .errors import NotInvertible, UnknownFunction
from .pseries import as_fraction, partition

# ---------------------------------------------------------------- factoring

_SIEVE_LOCK = threading.Lock()
_SPF: list[int] = [0, 1]


def _grow_sieve(limit: int) -> None:
    global _SPF
    with _SIEVE_LOCK:
        if len(_SPF) > limit:
            return
        size = max(limit + 1, 2 * len(_SPF), 1 << 12)
        spf = list(range(size))
        for p in range(2, math.isqrt(size - 1) + 1):
            if spf[p] == p:
                for m in range(p * p, size, p):
                    if spf[m] == m:
                        spf[m] = p
        _SPF = spf


SIEVE_LIMIT = 2_000_000


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {p: exponent}; sieve-backed up to SIEVE_LIMIT."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    if n <= SIEVE_LIMIT:
        if len(_SPF) <= n:
            _grow_sieve(n)
        spf = _SPF
        while n > 1:
            p = spf[n]
            out[p] = out.get(p, 0) + 1
            n //= p
        return out
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=1 << 16)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of n."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def unitary_divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = divs + [d * p**e for d in divs]
    return tuple(sorted(divs))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    r = n
    for p in factorize(n):
        r = r // p * (p - 1)
    return r


def omega_small(n: int) -> int:
    return len(factorize(n))


def omega_big(n: int) -> int:
    return sum(factorize(n).values())


def liouville(n: int) -> int:
    return -1 if omega_big(n) % 2 else 1


def sigma(alpha: int, n: int) -> Fraction:
    """Sum of d**alpha over divisors d of n; rational for negative alpha."""
    return sum((Fraction(d) ** alpha for d in divisors(n)), Fraction(0))


def jordan(t: int, n: int) -> int:
    r = n**t
    for p in factorize(n):
        r = r // p**t * (p**t - 1)
    return r


def mangoldt(n: int) -> float:
    fac = factorize(n) if n > 1 else {}
    if len(fac) == 1:
        return math.log(next(iter(fac)))
    return 0.0


def prime_pi(n: int) -> int:
    if len(_SPF) <= n:
        _grow_sieve(n)
    return sum(1 for m in range(2, n + 1) if _SPF[m] == m)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


# ---------------------------------------------------------------- function objects


class ExactFn:
    """Arithmetic function on n >= 1 with exact rational values, memoized."""

    def __init__(self, evaluator: Callable[[int], object], name: str | None = None):
        self._eval = evaluator
        self.name = name or getattr(evaluator, "__name__", "f")
        self._cache: dict[int, Fraction] = {}

    def __call__(self, n: int) -> Fraction:
        v = self._cache.get(n)
        if v is None:
            if n < 1:
                raise ValueError(f"{self.name} is defined for n >= 1, got {n}")
            v = as_fraction(self._eval(n))
            self._cache[n] = v
        return v

    def __repr__(self) -> str:
        return f"ExactFn({self.name})"

    def values(self, N: int) -> list[Fraction]:
        return [self(n) for n in range(1, N + 1)]

    def __add__(self, other: "ExactFn") -> "ExactFn":
        return ExactFn(lambda n: self(n) + other(n), f"{self.name}+{other.name}")

    def __sub__(self, other: "ExactFn") -> "ExactFn":
        return ExactFn(lambda n: self(n) - other(n), f"{self.name}-{other.name}")

    def __mul__(self, other: "ExactFn") -> "ExactFn":
        return ExactFn(lambda n: self(n) * other(n), f"{self.name}*{other.name}")

    def scale(self, c: object) -> "ExactFn":
        x = as_fraction(c)
        return ExactFn(lambda n: x * self(n), f"{c}*{self.name}")


class RealFn:
    """Arithmetic function with floating values (used for log-type functions)."""

    def __init__(self, evaluator: Callable[[int], float], name: str | None = None):
        self._eval = evaluator
        self.name = name or "f"

    def __call__(self, n: int) -> float:
        if n < 1:
            raise ValueError(f"{self.name} is defined for n >= 1, got {n}")
        return float(self._eval(n))

    def __repr__(self) -> str:
        return f"RealFn({self.name})"

    def values(self, N: int) -> list[float]:
        return [self(n) for n in range(1, N + 1)]


AnyFn = Union[ExactFn, RealFn, Callable[[int], object]]


def from_values(values: Sequence[object], name: str = "tab") -> ExactFn:
    """ExactFn defined by a table of values for n = 1..len(values)."""
    vals = [as_fraction(v) for v in values]

    def ev(n: int) -> Fraction:
        if n > len(vals):
            raise IndexError(f"{name} is tabulated only up to {len(vals)}")
        return vals[n - 1]

    return ExactFn(ev, name)


_BUILTINS: dict[str, Callable[..., AnyFn]] = {
    "mobius": lambda: ExactFn(mobius, "mobius"),
    "euler_phi": lambda: ExactFn(euler_phi, "euler_phi"),
    "liouville": lambda: ExactFn(liouville, "liouville"),
    "sigma": lambda a=1: ExactFn(lambda n: sigma(int(a), n), f"sigma{a}"),
    "jordan": lambda t=1: ExactFn(lambda n: jordan(int(t), n), f"jordan{t}"),
    "abs_mobius": lambda: ExactFn(lambda n: abs(mobius(n)), "abs_mobius"),
    "epsilon": lambda: ExactFn(lambda n: 1 if n == 1 else 0, "epsilon"),
    "one": lambda: ExactFn(lambda n: 1, "one"),
    "id": lambda k=1: ExactFn(lambda n: Fraction(n) ** int(k), f"id{k}"),
    "omega_small": lambda: ExactFn(omega_small, "omega_small"),
    "omega_big": lambda: ExactFn(omega_big, "omega_big"),
    "principal_char": lambda k=1: ExactFn(lambda n: 1 if math.gcd(n, int(k)) == 1 else 0, f"chi1_{k}"),
    "sq_indicator": lambda: ExactFn(lambda n: 1 if is_square(n) else 0, "sq_indicator"),
    "mangoldt": lambda: RealFn(mangoldt, "mangoldt"),
    "partition_shift": lambda k=0: ExactFn(lambda n: partition("P", n - int(k)), f"p_shift{k}"),
    "prime_pi": lambda: ExactFn(prime_pi, "prime_pi"),
    "alternating": lambda: ExactFn(lambda n: -1 if n % 2 else 1, "alternating"),
}

_ALIASES = {"mu": "mobius", "phi": "euler_phi", "lambda": "liouville", "d": "sigma0", "identity": "id"}


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def builtin(name: str, *params: object) -> AnyFn:
    """Look up a named arithmetic function.

    Parameters may be passed positionally or embedded in the name, e.g.
    ``builtin("sigma", 1)``, ``builtin("sigma1")`` or ``builtin("jordan:2")``.
    """
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if ":" in key:
        key, rest = key.split(":", 1)
        params = tuple(int(x) for x in rest.split(",")) + tuple(params)
    if key not in _BUILTINS:
        for base in ("sigma", "jordan", "id", "principal_char", "partition_shift"):
            if key.startswith(base) and key[len(base):].lstrip("-").isdigit():
                params = (int(key[len(base):]),) + tuple(params)
                key = base
                break
    if key not in _BUILTINS:
        raise UnknownFunction(name)
    return _BUILTINS[key](*params)


# ---------------------------------------------------------------- convolutions


def dirichlet_convolve(f: Callable[[int], object], g: Callable[[int], object], n: int):
    """(f * g)(n) = sum over d | n of f(d) g(n/d)."""
    return sum((f(d) * g(n // d) for d in divisors(n)), Fraction(0) if not _is_real(f, g) else 0.0)


def _is_real(*fs: object) -> bool:
    return any(isinstance(f, RealFn) for f in fs)


class _InverseTable:
    def __init__(self, h: Callable[[int], object]):
        self.h = h
        h1 = as_fraction(h(1))
        if h1 == 0:
            raise NotInvertible("h(1) = 0 has no Dirichlet inverse")
        self.inv_h1 = 1 / h1
        self.vals: dict[int, Fraction] = {1: self.inv_h1}

    def __call__(self, n: int) -> Fraction:
        v = self.vals.get(n)
        if v is not None:
            return v
        for m in divisors(n):
            if m not in self.vals:
                acc = Fraction(0)
                for d in divisors(m):
                    if d > 1:
                        acc += as_fraction(self.h(d)) * self.vals[m // d]
                self.vals[m] = -self.inv_h1 * acc
        return self.vals[n]


def dirichlet_inverse_fn(h: Callable[[int], object]) -> ExactFn:
    """The Dirichlet inverse of h as a memoized ExactFn."""
    tab = _InverseTable(h)
    return ExactFn(tab, f"inv({getattr(h, 'name', 'h')})")


def dirichlet_inverse(h: Callable[[int], object], n: int) -> Fraction:
    """h^{-1}(n) by the standard recursion over proper divisors."""
    return _InverseTable(h)(n)


def dirichlet_inverse_real(h: Callable[[int], float], N: int) -> list[float]:
    """Floating Dirichlet inverse values for n = 1..N (index 0 unused)."""
    h1 = h(1)
    if h1 == 0:
        raise NotInvertible("h(1) = 0 has no Dirichlet inverse")
    out = [0.0] * (N + 1)
    out[1] = 1.0 / h1
    hv = [0.0] + [h(n) for n in range(1, N + 1)]
    for n in range(2, N + 1):
        out[n] = -sum(hv[d] * out[n // d] for d in divisors(n) if d > 1) / h1
    return out


def mobius_invert(g: Callable[[int], object]) -> ExactFn:
    """n -> sum over d | n of g(d) mu(n/d)."""
    return ExactFn(lambda n: sum((as_fraction(g(d)) * mobius(n // d) for d in divisors(n)), Fraction(0)),
                   f"mobius_invert({getattr(g, 'name', 'g')})")


def divisor_sum(f: Callable[[int], object]) -> ExactFn:
    """n -> (f * 1)(n)."""
    return ExactFn(lambda n: sum((as_fraction(f(d)) for d in divisors(n)), Fraction(0)),
                   f"divsum({getattr(f, 'name', 'f')})")


def unitary_convolve(f: Callable[[int], object], g: Callable[[int], object], n: int) -> Fraction:
    """Divisor sum restricted to unitary divisors d (gcd(d, n/d) = 1)."""
    return sum((as_fraction(f(d)) * as_fraction(g(n // d)) for d in unitary_divisors(n)), Fraction(0))


def unitary_inverse(f: Callable[[int], object], n: int, method: str = "recursive") -> Fraction:
    """Inverse under unitary convolution.

    ``method="recursive"`` solves the triangular system; ``method="cohen"``
    sums signed products over ordered tuples of pairwise coprime unitary
    parts greater than one (requires f(1) = 1).
    """
    f1 = as_fraction(f(1))
    if f1 == 0:
        raise NotInvertible("f(1) = 0 has no unitary inverse")
    if method == "cohen":
        if f1 != 1:
            raise NotInvertible("the signed-tuple formula assumes f(1) = 1")
        return _cohen_inverse(f, n)
    memo: dict[int, Fraction] = {1: 1 / f1}

    def rec(m: int) -> Fraction:
        if m in memo:
            return memo[m]
        acc = Fraction(0)
        for d in unitary_divisors(m):
            if d > 1:
                acc += as_fraction(f(d)) * rec(m // d)
        memo[m] = -acc / f1
        return memo[m]

    return rec(n)


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _cohen_inverse(f: Callable[[int], object], n: int) -> Fraction:
    if n == 1:
        return Fraction(1)
    comps = [p**e for p, e in factorize(n).items()]
    total = Fraction(0)
    for blocks in _set_partitions(comps):
        parts = [math.prod(b) for b in blocks]
        k = len(parts)
        for order in set(permutations(parts)):
            prod = Fraction(1)
            for d in order:
                prod *= as_fraction(f(d))
            total += (-1) ** k * prod
    return total


# ---------------------------------------------------------------- Euler transform


def euler_transform(a: Callable[[int], object] | Sequence[object], N: int) -> list[Fraction]:
    """b(1..N) with 1 + sum b_n q^n equal to the product of (1 - q^i)^(-a_i)."""
    av = _seq(a, N)
    c = [Fraction(0)] * (N + 1)
    for d in range(1, N + 1):
        if av[d]:
            for m in range(d, N + 1, d):
                c[m] += d * av[d]
    b = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        b[n] = sum((c[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return b[1:]


def euler_inverse(b: Sequence[object]) -> list[Fraction]:
    """Recover a(1..N) from b(1..N) produced by :func:`euler_transform`."""
    N = len(b)
    bv = [Fraction(1)] + [as_fraction(x) for x in b]
    c = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        c[n] = n * bv[n] - sum((c[k] * bv[n - k] for k in range(1, n)), Fraction(0))
    return [sum((c[d] * mobius(n // d) for d in divisors(n)), Fraction(0)) / n for n in range(1, N + 1)]


def _seq(a: Callable[[int], object] | Sequence[object], N: int) -> list[Fraction]:
    if callable(a):
        return [Fraction(0)] + [as_fraction(a(n)) for n in range(1, N + 1)]
    vals = [as_fraction(x) for x in a][:N]
    if len(vals) < N:
        raise ValueError("sequence shorter than N")
    return [Fraction(0)] + vals


# ---------------------------------------------------------------- summatory tools


@dataclass(frozen=True)
class SummatoryTable:
    bound: int
    values: tuple  # F(1..x)

    def __call__(self, x: int):
        if x < 1:
            return 0
        return self.values[x - 1]


def summatory(f: AnyFn, x: int) -> SummatoryTable:
    acc: object = 0.0 if isinstance(f, RealFn) else Fraction(0)
    out = []
    for n in range(1, x + 1):
        acc = acc + f(n)
        out.append(acc)
    return SummatoryTable(x, tuple(out))


def mertens(x: int) -> int:
    return sum(mobius(n) for n in range(1, x + 1))


def hyperbola_sum(f: Callable[[int], object], h: Callable[[int], object], x: int) -> Fraction:
    """Sum over n <= x of f(n) H(x // n), H the summatory function of h."""
    H = summatory(ExactFn(h) if not isinstance(h, ExactFn) else h, x)
    return sum((as_fraction(f(n)) * H(x // n) for n in range(1, x + 1)), Fraction(0))


@dataclass(frozen=True)
class Decomposition:
    coprime: Fraction
    divisor: Fraction
    remainder: Fraction
    total: Fraction


def three_set_decomposition(f: Callable[[int], object], x: int) -> Decomposition:
    """Split the partial sum up to x into coprime, divisor (d > 1) and remainder parts."""
    total = sum((as_fraction(f(d)) for d in range(1, x + 1)), Fraction(0))
    cop = sum((as_fraction(f(d)) for d in range(1, x + 1) if math.gcd(d, x) == 1), Fraction(0))
    div = sum((as_fraction(f(d)) for d in divisors(x) if d > 1), Fraction(0))
    return Decomposition(cop, div, total - cop - div, total)


def restricted_divisor_coeff(f: Callable[[int], object], m: int, t: int, k: int, n: int) -> Fraction:
    """Sum over d | n with t <= d <= n // m of binom(n/d - m + k, k) f(d)."""
    if m < 1 or t < 1 or k < 0:
        raise ValueError("need m, t >= 1 and k >= 0")
    return sum(
        (math.comb(n // d - m + k, k) * as_fraction(f(d)) for d in divisors(n) if t <= d <= n // m),
        Fraction(0),
    )


def coprime_sum(f: Callable[[int], object], n: int) -> Fraction:
    return sum((as_fraction(f(d)) for d in range(1, n + 1) if math.gcd(d, n) == 1), Fraction(0))


def coprime_sum_mobius_form(f: Callable[[int], object], n: int) -> Fraction:
    """Same sum written as sum_k f(k) sum over d | (k, n-k) of mu(d)."""
    total = Fraction(0)
    for k in range(1, n + 1):
        g = math.gcd(k, n - k)
        total += as_fraction(f(k)) * sum(mobius(d) for d in divisors(g))
    return total


def iter_values(f: Callable[[int], object], N: int) -> Iterable[Fraction]:
    return (as_fraction(f(n)) for n in range(1, N + 1))
