"""Kernel-weighted convolutions and their generating-function factorizations.

Three families live here:

* K-convolutions ``sum_{d|n} f(d) g(n/d) K0(n, d)`` with their inversion and
  an LGF-style factorization;
* Toeplitz and OGF functional-equation constructions for triangular sums;
* D-convolutions ``sum_k f(k) g(n+1-k) D(n, k)`` with inverse functions and
  factorization matrices over an arbitrary ``C(q)``.

Where two computational routes exist (closed form and forward substitution)
both are exposed so that one can audit the other.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arithfn import divisors, factorize, liouville, mobius
from .errors import NotInvertible, SingularFactorization, SingularKernel, SingularToeplitz
from .pseries import Series, as_fraction
from .trimatrix import TriMatrix

Fn = Callable[[int], object]
KernelFn = Callable[[int, int], object]


@dataclass(frozen=True)
class Kernel:
    """A bivariate weight K(n, k), evaluated exactly for 1 <= k <= n."""

    fn: KernelFn
    name: str = "kernel"
    divisor_supported: bool = False

    def __call__(self, n: int, k: int) -> Fraction:
        if k < 1 or k > n:
            return Fraction(0)
        if self.divisor_supported and n % k:
            return Fraction(0)
        return as_fraction(self.fn(n, k))

    def matrix(self, N: int) -> TriMatrix:
        return TriMatrix.from_function(self, N)

    def is_symmetric(self, N: int) -> bool:
        """D(n, k) = D(n, n + 1 - k) for all n <= N."""
        return all(self(n, k) == self(n, n + 1 - k) for n in range(1, N + 1) for k in range(1, n + 1))


def _nu(p: int, n: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def b_kernel(n: int, d: int) -> int:
    """prod over p | n of binom(nu_p(n), nu_p(d))."""
    out = 1
    for p, a in factorize(n).items():
        out *= math.comb(a, _nu(p, d))
    return out


def _table_kernel(path: str) -> KernelFn:
    rows: dict[tuple[int, int], Fraction] = {}
    with open(path, newline="") as fh:
        for rec in csv.reader(fh):
            if not rec or rec[0].startswith("#") or rec[0] == "n":
                continue
            rows[(int(rec[0]), int(rec[1]))] = Fraction(rec[2])
    return lambda n, k: rows.get((n, k), Fraction(0))


_PRESETS: dict[str, KernelFn] = {
    "one": lambda n, k: 1,
    "k": lambda n, k: k,
    "n": lambda n, k: n,
    "binom": lambda n, k: math.comb(n - 1, k - 1),
    "B": b_kernel,
}


def kernel_from_spec(text: str, *, divisor_supported: bool = False) -> Kernel:
    """Build a kernel from a preset name or ``csv:<path>`` with rows n,k,value."""
    if text.startswith("csv:"):
        return Kernel(_table_kernel(text[4:]), text, divisor_supported)
    if text not in _PRESETS:
        raise KeyError(f"unknown kernel {text!r}; presets: {sorted(_PRESETS)}")
    return Kernel(_PRESETS[text], text, divisor_supported)


# ------------------------------------------------------------------ K-convolutions


def k_convolve(f: Fn, g: Fn, K0: KernelFn, n: int) -> Fraction:
    """(f *_K g)(n) = sum_{d|n} f(d) g(n/d) K0(n, d)."""
    return sum((as_fraction(f(d)) * as_fraction(g(n // d)) * as_fraction(K0(n, d)) for d in divisors(n)), Fraction(0))


def divisor_kernel_matrix(K0: KernelFn, N: int) -> TriMatrix:
    """The N x N matrix K0(n, d)[d | n]."""
    return TriMatrix.from_function(lambda n, d: K0(n, d) if n % d == 0 else 0, N)


def _check_diag(K0: KernelFn, N: int) -> None:
    for n in range(1, N + 1):
        if as_fraction(K0(n, n)) == 0:
            raise SingularKernel(f"K0({n},{n}) = 0")


def reduced_inverse_kernel(K0: KernelFn, N: int) -> TriMatrix:
    """K0^{-1} in the sense of the inversion formula: (K0[d|n])^{-1} times the divisor matrix.

    It is divisor-supported and equals the identity for K0 = 1.
    """
    _check_diag(K0, N)
    Kinv = divisor_kernel_matrix(K0, N).inverse()
    tdiv = TriMatrix.from_function(lambda n, d: 1 if n % d == 0 else 0, N)
    return Kinv @ tdiv


def k_mobius_invert(
    g: Fn, K0: KernelFn, n: int, *, method: str = "formula", Kred: TriMatrix | None = None
) -> Fraction:
    """f(n) from g(n) = sum_{d|n} f(d) K0(n, d).

    ``formula``: sum_{d|n} sum_{r|d} g(r) mu(d/r) K0^{-1}(n, d) with the reduced
    inverse kernel; ``substitution``: divisor-recursive solve.
    """
    if method == "formula":
        Kred = Kred if Kred is not None and Kred.size >= n else reduced_inverse_kernel(K0, n)
        total = Fraction(0)
        for d in divisors(n):
            c = Kred[n, d]
            if c:
                total += c * sum((as_fraction(g(r)) * mobius(d // r) for r in divisors(d)), Fraction(0))
        return total
    if method == "substitution":
        _check_diag(K0, n)
        memo: dict[int, Fraction] = {}

        def rec(m: int) -> Fraction:
            if m not in memo:
                acc = as_fraction(g(m)) - sum((rec(d) * as_fraction(K0(m, d)) for d in divisors(m) if d < m), Fraction(0))
                memo[m] = acc / as_fraction(K0(m, m))
            return memo[m]

        return rec(n)
    raise ValueError(method)


def k_mobius_invert_literal(g: Fn, K0: KernelFn, N: int) -> list[Fraction]:
    """The inversion formula with K0^{-1} read as the inverse of the full triangle (K0(n, d))."""
    _check_diag(K0, N)
    inv = TriMatrix.from_function(K0, N).inverse()
    mg = [sum((as_fraction(g(r)) * mobius(d // r) for r in divisors(d)), Fraction(0)) for d in range(1, N + 1)]
    return [sum((inv[n, d] * mg[d - 1] for d in divisors(n)), Fraction(0)) for n in range(1, N + 1)]


def b_transform(g: Fn, n: int) -> Fraction:
    """sum_{d|n} g(d) B(n, d)."""
    return sum((as_fraction(g(d)) * b_kernel(n, d) for d in divisors(n)), Fraction(0))


def b_inverse_transform(f: Fn, n: int, *, literal: bool = False) -> Fraction:
    """sum_{d|n} f(d) lambda(n/d) B(n, d); ``literal`` weights by lambda(d) instead."""
    return sum(
        (as_fraction(f(d)) * liouville(d if literal else n // d) * b_kernel(n, d) for d in divisors(n)), Fraction(0)
    )


def h_series(K0: KernelFn, m: int, N: int, *, literal: bool = False) -> Series:
    """H_{K,m}(q) truncated at N.

    Default: sum over multiples j of m of K0(j, m) q^j, whose LGF coefficients are
    (f *_K 1)(n). ``literal``: sum_k K0(m, k) q^{mk}.
    """
    c = [Fraction(0)] * (N + 1)
    for j in range(m, N + 1, m):
        c[j] = as_fraction(K0(m, j // m) if literal else K0(j, m))
    return Series(c, N)


def k_product(K0: KernelFn, N: int) -> Series:
    """prod_{j <= N} (1 + H_{K,j}(q)); equals (q;q)_inf^{-1} for K0 = 1."""
    out = Series.one(N)
    for j in range(1, N + 1):
        out = out * (h_series(K0, j, N) + 1)
    return out


def k_lgf(f: Fn, K0: KernelFn, N: int, *, literal: bool = False) -> Series:
    out = Series.zero(N)
    for m in range(1, N + 1):
        out = out + h_series(K0, m, N, literal=literal) * as_fraction(f(m))
    return out


@dataclass(frozen=True)
class KFactorization:
    S: TriMatrix
    S_inv: TriMatrix
    product: Series


def k_factorization(K0: KernelFn, N: int) -> KFactorization:
    """S-hat(n, m) = [q^n] H_{K,m} / prod(1 + H_{K,j}) and its closed-form inverse."""
    _check_diag(K0, N)
    P = k_product(K0, N)
    Pinv = P.recip()
    cols = [h_series(K0, m, N) * Pinv for m in range(1, N + 1)]
    S = TriMatrix.from_function(lambda n, m: cols[m - 1][n], N)
    Kred = reduced_inverse_kernel(K0, N)
    return KFactorization(S, TriMatrix.from_function(lambda n, m: _k_inv_entry(Kred, P, n, m), N), P)


def _k_inv_entry(Kred: TriMatrix, P: Series, n: int, m: int, weight: Callable[[int, int], Fraction] | None = None):
    w = weight or (lambda a, b: Kred[a, b])
    total = Fraction(0)
    for d in divisors(n):
        c = w(n, d)
        if c:
            total += c * sum((mobius(d // s) * (P[s - m] if s >= m else 0) for s in divisors(d)), Fraction(0))
    return total


def k_factorization_inverse_literal(K0: KernelFn, N: int) -> TriMatrix:
    """Inverse entries with K0(n, d) itself in place of the reduced inverse kernel."""
    P = k_product(K0, N)
    return TriMatrix.from_function(lambda n, m: _k_inv_entry(None, P, n, m, lambda a, b: as_fraction(K0(a, b))), N)


# ------------------------------------------------------------------ Toeplitz


class Toeplitz:
    """Lower-triangular Toeplitz operator with generator t(1), t(2), ..."""

    def __init__(self, t: Sequence[object]):
        self.t = [as_fraction(x) for x in t]

    def matrix(self, N: int) -> TriMatrix:
        return TriMatrix.from_function(lambda n, k: self._at(n + 1 - k), N)

    def _at(self, i: int) -> Fraction:
        return self.t[i - 1] if i <= len(self.t) else Fraction(0)

    def apply(self, g: Sequence[object]) -> list[Fraction]:
        gg = [as_fraction(x) for x in g]
        return [sum((self._at(k) * gg[n - k] for k in range(1, n + 1)), Fraction(0)) for n in range(1, len(gg) + 1)]

    def inverse(self, N: int) -> "Toeplitz":
        if not self.t or self.t[0] == 0:
            raise SingularToeplitz("t(1) = 0")
        s = Series([self._at(i + 1) for i in range(N)], N - 1).recip()
        return Toeplitz(list(s.coeffs))


def toeplitz_apply(t: Sequence[object], g: Sequence[object]) -> list[Fraction]:
    """(T_N(t) g)_n = sum_k t(k) g(n + 1 - k)."""
    return Toeplitz(t).apply(g)


def dirichlet_toeplitz(f: Fn, N: int) -> TriMatrix:
    """Divisor analogue of T_N: entry f(n/d)[d | n]."""
    return TriMatrix.from_function(lambda n, d: as_fraction(f(n // d)) if n % d == 0 else 0, N)


def toeplitz_kcvl(K0: KernelFn, f: Fn, g: Fn, n: int) -> Fraction:
    """(f *_K g)(n) as row n of (K0 o D_N(g)) applied to f, with D_N the divisor Toeplitz matrix."""
    Dg = dirichlet_toeplitz(g, n)
    return sum((as_fraction(K0(n, d)) * Dg[n, d] * as_fraction(f(d)) for d in range(1, n + 1)), Fraction(0))


def toeplitz_kcvl_literal(K0: KernelFn, f: Fn, g: Fn, N: int) -> list[Fraction]:
    """Matrix product K * T_N(f) * g with K = K0[d | n]."""
    Tf = Toeplitz([f(k) for k in range(1, N + 1)]).apply([g(k) for k in range(1, N + 1)])
    return divisor_kernel_matrix(K0, N).apply(Tf)


def shift_inverse(N: int) -> TriMatrix:
    """(I - U^T): ones on the diagonal, minus ones just below."""
    return TriMatrix.from_function(lambda i, j: 1 if i == j else (-1 if i == j + 1 else 0), N)


# ------------------------------------------------------------------ OGF functional equations


def triangular_sum(g: Callable[[int, int], object], f: Sequence[object], n: int) -> Fraction:
    """S_f[g](n) = sum_{k=1}^{n} g(n, k) f_k with f indexed from 0."""
    return sum((as_fraction(g(n, k)) * as_fraction(f[k]) for k in range(1, n + 1)), Fraction(0))


def ogf_functional(case: str, components: tuple[Series, Series], f: Sequence[object], N: int, *, literal: bool = False) -> Series:
    """Closed OGF of S_f[g] for column generating functions of product type.

    ``A``: G_k = H1 H2^k gives H1 (F(H2) - f0).  ``literal`` multiplies by an
    extra H2 factor, as in one printed variant.
    ``B``: G_k = H3 H4^k / k! gives H3 (F-hat(H4) - f0) with F-hat the EGF.
    """
    fs = [as_fraction(x) for x in f][: N + 1]
    fs += [Fraction(0)] * (N + 1 - len(fs))
    Ha, Hb = (c.truncate(N) for c in components)
    if case == "A":
        F = Series(fs, N)
        out = Ha * (F.compose(Hb) - fs[0])
        return out * Hb if literal else out
    if case == "B":
        Fhat = Series([fs[k] / math.factorial(k) for k in range(N + 1)], N)
        return Ha * (Fhat.compose(Hb) - fs[0])
    raise ValueError(case)


def ogf_direct(case: str, components: tuple[Series, Series], f: Sequence[object], N: int) -> Series:
    """Oracle: sum_k f_k G_k(q) with the column series built by repeated products."""
    fs = [as_fraction(x) for x in f][: N + 1]
    fs += [Fraction(0)] * (N + 1 - len(fs))
    Ha, Hb = (c.truncate(N) for c in components)
    out = Series.zero(N)
    power = Series.one(N)
    for k in range(1, N + 1):
        power = power * Hb
        col = Ha * power
        if case == "B":
            col = col * Fraction(1, math.factorial(k))
        out = out + col * fs[k]
    return out


def binomial_transform(f: Sequence[object], N: int) -> tuple[list[Fraction], list[Fraction]]:
    """([z^x] F(-z/(1-z))/(1-z), sum_n binom(x, n)(-1)^n f_n) for x = 0..N."""
    fs = [as_fraction(x) for x in f][: N + 1]
    fs += [Fraction(0)] * (N + 1 - len(fs))
    geo = Series([1] * (N + 1), N)
    inner = Series([0] + [-1] * N, N)
    via_series = Series(fs, N).compose(inner) * geo
    direct = [sum((math.comb(x, n) * (-1) ** n * fs[n] for n in range(x + 1)), Fraction(0)) for x in range(N + 1)]
    return list(via_series.coeffs), direct


def coprime_column_series(k: int, N: int) -> tuple[Series, Series]:
    """(sum_{n>=k} [(n,k)=1] q^n, q^k sum_{d|k} mu(d)/(1 - q^d)) to order N."""
    direct = Series([1 if n >= k and math.gcd(n, k) == 1 else 0 for n in range(N + 1)], N)
    acc = [Fraction(0)] * (N + 1)
    for d in divisors(k):
        mu = mobius(d)
        if mu:
            for n in range(k, N + 1, d):
                acc[n] += mu
    return direct, Series(acc, N)


# ------------------------------------------------------------------ set / triangle factorizations


Membership = Callable[[int, int], bool]


def coprime_sets(k: int, n: int) -> bool:
    """k in A_{1,n}: 1 <= k <= n and gcd(k, n) = 1."""
    return 1 <= k <= n and math.gcd(k, n) == 1


def gcd_divisor_sets(d: int, n: int) -> bool:
    """d in A_{2,n}: some 1 <= k <= n has d | gcd(k, n) (brute-force scan)."""
    return 1 <= d <= n and any(math.gcd(k, n) % d == 0 for k in range(1, n + 1))


def divisor_sets(k: int, n: int) -> bool:
    return n % k == 0


def set_sum(A: Membership, f: Fn, n: int) -> Fraction:
    return sum((as_fraction(f(k)) for k in range(1, n + 1) if A(k, n)), Fraction(0))


def set_matrix(A: Membership, C: Series, N: int) -> TriMatrix:
    """v(n, k) = [q^n] C(q) sum_m [k in A_m] q^m."""
    c = C.coeffs

    def entry(n: int, k: int) -> Fraction:
        return sum((c[n - m] for m in range(k, n + 1) if n - m <= C.order and A(k, m)), Fraction(0))

    return TriMatrix.from_function(entry, N)


def set_factorization(A: Membership, C: Series, N: int) -> tuple[TriMatrix, TriMatrix]:
    """(v, v^{-1}); raises SingularFactorization unless n in A_n for all n <= N."""
    if C[0] == 0:
        raise SingularFactorization("C(0) = 0")
    for n in range(1, N + 1):
        if not A(n, n):
            raise SingularFactorization(f"{n} is not in A_{n}")
    v = set_matrix(A, C, N)
    return v, v.inverse()


def triangle_factorization(T: KernelFn, C: Series, N: int) -> TriMatrix:
    """u(n, k) = [q^n] C(q) sum_m T(m, k) q^m."""
    c = C.coeffs
    return TriMatrix.from_function(
        lambda n, k: sum((c[n - j] * as_fraction(T(j, k)) for j in range(k, n + 1) if n - j <= C.order), Fraction(0)),
        N,
    )


def factorized_sums(M: TriMatrix, C: Series, f: Fn, N: int) -> list[Fraction]:
    """Coefficients 1..N of C(q)^{-1} sum_n (sum_k M(n, k) f(k)) q^n."""
    inner = M.apply([f(k) for k in range(1, N + 1)])
    s = Series([0] + inner, N) * C.truncate(N).recip()
    return [s[n] for n in range(1, N + 1)]


# ------------------------------------------------------------------ D-convolutions


def d_convolve(f: Fn, g: Fn, D: KernelFn, n: int) -> Fraction:
    """(f boxdot_D g)(n) = sum_{k=1}^{n} f(k) g(n + 1 - k) D(n, k)."""
    return sum(
        (as_fraction(f(k)) * as_fraction(g(n + 1 - k)) * as_fraction(D(n, k)) for k in range(1, n + 1)), Fraction(0)
    )


def _check_d(g: Fn, D: KernelFn, n: int) -> None:
    if as_fraction(g(1)) == 0:
        raise NotInvertible("g(1) = 0")
    for m in range(1, n + 1):
        if as_fraction(D(m, m)) == 0:
            raise NotInvertible(f"D({m},{m}) = 0")


class DInverse:
    """Left inverse of g under D-convolution, by the recursion."""

    def __init__(self, g: Fn, D: KernelFn):
        self.g, self.D = g, D
        self.vals: list[Fraction] = []

    def __call__(self, n: int) -> Fraction:
        _check_d(self.g, self.D, n) if len(self.vals) < n else None
        g1 = as_fraction(self.g(1))
        while len(self.vals) < n:
            m = len(self.vals) + 1
            if m == 1:
                self.vals.append(1 / (as_fraction(self.D(1, 1)) * g1))
                continue
            acc = sum(
                (self.vals[k - 1] * as_fraction(self.g(m + 1 - k)) * as_fraction(self.D(m, k)) for k in range(1, m)),
                Fraction(0),
            )
            self.vals.append(-acc / (as_fraction(self.D(m, m)) * g1))
        return self.vals[n - 1]


def d_inverse(g: Fn, D: KernelFn, n: int, *, method: str = "recursive") -> Fraction:
    """g^{-1}[D](n).

    ``recursive``: forward recursion; ``matrix``: entry (n, 1) of the inverse of
    (D(n, k) g(n + 1 - k)); ``closed``: D^{-1}(n, 1) [q^{n-1}] (sum g(m+1) q^m)^{-1},
    which presumes the matrix equals D times the Toeplitz matrix of g.
    """
    _check_d(g, D, n)
    if method == "recursive":
        return DInverse(g, D)(n)
    if method == "matrix":
        A = TriMatrix.from_function(lambda a, b: as_fraction(D(a, b)) * as_fraction(g(a + 1 - b)), n)
        return A.inverse()[n, 1]
    if method == "closed":
        Dinv = TriMatrix.from_function(D, n).inverse()
        G = Series([g(m + 1) for m in range(n)], n - 1).recip()
        return Dinv[n, 1] * G[n - 1]
    raise ValueError(method)


def d_inverse_table(g: Fn, D: KernelFn, n: int) -> Fraction:
    """Rows 1-4 of the printed symbolic table of g^{-1}[D], evaluated."""
    G = lambda i: as_fraction(g(i))  # noqa: E731
    d = lambda a, b: as_fraction(D(a, b))  # noqa: E731
    if n == 1:
        return 1 / (d(1, 1) * G(1))
    if n == 2:
        return -d(2, 2) * G(2) / (d(1, 1) * d(2, 1) * G(1) ** 2)
    if n == 3:
        return d(2, 2) * d(3, 2) * G(2) ** 2 / (d(1, 1) * d(2, 1) * d(3, 1) * G(1) ** 3) - d(3, 3) * G(3) / (
            d(1, 1) * d(3, 1) * G(1) ** 2
        )
    if n == 4:
        den3 = d(1, 1) * d(2, 1) * d(3, 1) * d(4, 1)
        return (
            -d(2, 2) * d(3, 2) * d(4, 2) * G(2) ** 3 / (den3 * G(1) ** 4)
            + (d(2, 1) * d(3, 3) * d(4, 2) + d(2, 2) * d(3, 1) * d(4, 3)) * G(3) * G(2) / (den3 * G(1) ** 3)
            - d(4, 4) * G(4) / (d(1, 1) * d(4, 1) * G(1) ** 2)
        )
    raise ValueError("table covers n <= 4")


@dataclass(frozen=True)
class DFactorization:
    S: TriMatrix
    S_inv: TriMatrix


def d_matrix(g: Fn, C: Series, D: KernelFn, N: int) -> TriMatrix:
    """s(n, k) = sum_j c_{n-j}(C) g(j + 1 - k) D(j, k)."""
    c = C.coeffs
    return TriMatrix.from_function(
        lambda n, k: sum(
            (c[n - j] * as_fraction(g(j + 1 - k)) * as_fraction(D(j, k)) for j in range(k, n + 1) if n - j <= C.order),
            Fraction(0),
        ),
        N,
    )


def d_inverse_matrix_closed(g: Fn, C: Series, D: KernelFn, N: int) -> TriMatrix:
    """s^{-1}(n, k) = sum_j g^{-1}[D](n + 1 - j) p_{j-k}(C) D(n, j), as printed."""
    P = C.truncate(N).recip()
    ginv = DInverse(g, D)
    return TriMatrix.from_function(
        lambda n, k: sum((ginv(n + 1 - j) * P[j - k] * as_fraction(D(n, j)) for j in range(k, n + 1)), Fraction(0)),
        N,
    )


def d_factorization(g: Fn, C: Series, D: KernelFn, N: int) -> DFactorization:
    """The D-convolution factorization matrix and its exact inverse by substitution."""
    if C[0] == 0:
        raise SingularFactorization("C(0) = 0")
    _check_d(g, D, N)
    S = d_matrix(g, C, D, N)
    return DFactorization(S, S.inverse())


def d_inverse_values(g: Fn, D: KernelFn, N: int, *, method: str = "recursive") -> list[Fraction]:
    """g^{-1}[D](1..N) by one route, computing shared work once."""
    _check_d(g, D, N)
    if method == "recursive":
        inv = DInverse(g, D)
        return [inv(n) for n in range(1, N + 1)]
    if method == "matrix":
        A = TriMatrix.from_function(lambda a, b: as_fraction(D(a, b)) * as_fraction(g(a + 1 - b)), N).inverse()
        return [A[n, 1] for n in range(1, N + 1)]
    if method == "closed":
        Dinv = TriMatrix.from_function(D, N).inverse()
        G = Series([g(m + 1) for m in range(N)], N - 1).recip()
        return [Dinv[n, 1] * G[n - 1] for n in range(1, N + 1)]
    raise ValueError(method)
