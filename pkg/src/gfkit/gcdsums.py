"""Factorizations of coprime-restricted (type I) and gcd-periodic (type II) sums.

Type I sums are ``T_f(x) = sum_{d <= x, (d, x) = 1} f(d)``; type II sums are
``L_{f,g,k}(x) = sum_{d | (k, x)} f(d) g(x/d)``.  The exact parts work over
``Fraction`` and :class:`~gfkit.trimatrix.Poly`; the Fourier identities are
evaluated in double precision and rounded back to rationals.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .arithfn import (
    dirichlet_inverse_fn,
    divisors,
    euler_phi,
    factorize,
    mobius,
    omega_big,
    sigma,
)
from .errors import PreconditionFailed, SingularW
from .pseries import as_fraction, partition, pentagonal_terms
from .trimatrix import Poly, PolyMatrix, TriMatrix

Fn = Callable[[int], object]


def _p(n: int) -> int:
    return partition("P", n) if n >= 0 else 0


def _phat(n: int) -> int:
    return partition("PHAT", n) if n >= 0 else 0


def _pent(limit: int) -> list[tuple[int, int]]:
    """Pentagonal exponents G_j <= limit (including 0) with their signs."""
    return pentagonal_terms(max(limit, 0))


def _chi(k: int, m: int) -> int:
    """Principal character modulo k at m."""
    return 1 if math.gcd(m, k) == 1 else 0


def _fsum_c(values) -> complex:
    """Correctly rounded sum of complex values (separate real/imag fsum)."""
    vs = list(values)
    return complex(math.fsum(v.real for v in vs), math.fsum(v.imag for v in vs))


def e(num: int, den: int) -> complex:
    """exp(2 pi i num/den) with the argument reduced mod 1 first."""
    r = num % den
    return cmath.exp(2j * math.pi * r / den)


def _round(x: complex, tol: float, max_den: int = 10**6) -> tuple[Fraction, float]:
    """Nearest rational with bounded denominator and the residual of the rounding."""
    if abs(x.imag) > tol:
        raise ArithmeticError(f"imaginary part {x.imag!r} exceeds tolerance")
    q = Fraction(x.real).limit_denominator(max_den)
    return q, abs(complex(x) - float(q))


# ------------------------------------------------------------------ type I / II sums


def type1_sum(f: Fn, x: int):
    """T_f(x) = sum of f(d) over 1 <= d <= x with gcd(d, x) = 1."""
    if x < 1:
        raise ValueError("x must be >= 1")
    terms = [f(d) for d in range(1, x + 1) if math.gcd(d, x) == 1]
    return _total(terms)


def type2_sum(f: Fn, g: Fn, k: int, x: int):
    """L_{f,g,k}(x) = sum over d | gcd(k, x) of f(d) g(x/d); k = 0 reads gcd(0, x) = x."""
    if x < 1 or k < 0:
        raise ValueError("need x >= 1 and k >= 0")
    return _total([f(d) * g(x // d) for d in divisors(math.gcd(k, x))])


def _num(x: object):
    """Ints stay ints (fast path); everything else becomes an exact Fraction."""
    return x if type(x) is int else as_fraction(x)


def _total(terms: list):
    if all(type(t) is int for t in terms):
        return Fraction(sum(terms))
    if any(isinstance(t, complex) for t in terms):
        return _fsum_c(terms)
    if any(isinstance(t, float) for t in terms):
        return math.fsum(terms)
    return sum((as_fraction(t) for t in terms), Fraction(0))


# ------------------------------------------------------------------ mu_{n,k} triangle


@dataclass(frozen=True)
class MuTriangle:
    """The inverse of the 0/1 triangle [(n+1, k) = 1][k <= n]."""

    matrix: TriMatrix
    inverse: TriMatrix

    @property
    def size(self) -> int:
        return self.matrix.size

    def __getitem__(self, nk: tuple[int, int]) -> int:
        return int(self.matrix[nk])

    def rows(self) -> list[list[int]]:
        return self.matrix.as_ints()

    def invert_sums(self, g: Fn) -> list[Fraction]:
        """f(1..N) from g = T_f via f(n) = sum_d g(d + 1) mu_{n,d}."""
        return [
            sum((as_fraction(g(d + 1)) * self.matrix[n, d] for d in range(1, n + 1)), Fraction(0))
            for n in range(1, self.size + 1)
        ]


def coprime_indicator_matrix(N: int) -> TriMatrix:
    return TriMatrix.from_function(lambda n, k: 1 if math.gcd(n + 1, k) == 1 else 0, N)


def mu_triangle(N: int) -> MuTriangle:
    if N < 1:
        raise ValueError("N must be >= 1")
    A = coprime_indicator_matrix(N)
    return MuTriangle(A.inverse(), A)


def mu_column_sums(tri: MuTriangle, n: int, k: int) -> tuple[Fraction, Fraction]:
    """(sum over (d, n) = 1 of mu_{d,k}, same sum of the inverse entries), d <= n."""
    ds = [d for d in range(1, n + 1) if math.gcd(d, n) == 1 and d >= k]
    return (
        sum((tri.matrix[d, k] for d in ds), Fraction(0)),
        sum((tri.inverse[d, k] for d in ds), Fraction(0)),
    )


# ------------------------------------------------------------------ t_{n,k} and inverse


@functools.lru_cache(maxsize=None)
def t_entry(n: int, k: int) -> int:
    """Canonical t(n, k) = sum_{j=k}^{n} [q^{n-j}](q;q)_inf [(j+1, k) = 1]."""
    if k > n or k < 1:
        return 0
    return sum(_phat(n - j) for j in range(k, n + 1) if math.gcd(j + 1, k) == 1)


def t_entry_printed(n: int, k: int, form: str = "theorem") -> int:
    """Pentagonal-sign sums in the two literal index conventions.

    ``theorem``: sum_j s_j chi_k(n + 1 - G_j) [n - G_j >= 1].
    ``lemma``:   sum_j s_j chi_k(n - G_j) [n - G_j >= k + 1].
    ``shifted``: sum_j s_j chi_k(n + 1 - G_j) [n - G_j >= k], which is the canonical entry.
    """
    tot = 0
    for G, s in _pent(n):
        m = n - G
        if form == "theorem":
            ok, arg = m >= 1, m + 1
        elif form == "lemma":
            ok, arg = m >= k + 1, m
        elif form == "shifted":
            ok, arg = m >= k, m + 1
        else:
            raise ValueError(form)
        if ok:
            tot += s * _chi(k, arg)
    return tot


def t_matrix(N: int) -> TriMatrix:
    return TriMatrix.from_function(t_entry, N)


def t_inverse(N: int, tri: MuTriangle | None = None) -> TriMatrix:
    """t^{-1}(n, k) = sum_d p(d - k) mu_{n,d}."""
    tri = tri or mu_triangle(N)
    return TriMatrix.from_function(
        lambda n, k: sum((_p(d - k) * tri.matrix[n, d] for d in range(k, n + 1)), Fraction(0)), N
    )


def s_entry(n: int, k: int) -> int:
    """[q^n] (q;q)_inf q^k/(1 - q^k)."""
    return sum(_phat(n - m) for m in range(k, n + 1, k))


def t_entry_mobius(n: int, k: int) -> int:
    """t(n, k) through s: s_{n,1} for k = 1, else sum_{d|k} mu(d) s_{n+1-k+d, d}."""
    if k == 1:
        return s_entry(n, 1)
    return sum(mobius(d) * s_entry(n + 1 - k + d, d) for d in divisors(k))


def chi_convolution(n: int, k: int) -> int:
    """sum_j t(j, k) p(n - j), which equals chi_k(n + 1) [k <= n]."""
    return sum(t_entry(j, k) * _p(n - j) for j in range(k, n + 1))


# ------------------------------------------------------------------ type I expansions


def _v(f: Fn, n: int) -> Fraction:
    """sum_{k < n} t(n - 1, k) f(k)."""
    return sum((t_entry(n - 1, k) * as_fraction(f(k)) for k in range(1, n)), Fraction(0))


def type1_expand(f: Fn, x: int, *, literal: bool = False):
    """T_f(x) through the factorization.

    The default uses sum_j p(x - j) sum_{k<j} t(j-1, k) f(k) + f(1)[x = 1].
    ``literal=True`` drops the one-step shift: sum_j p(x - j) sum_k t(j, k) f(k)
    for j >= 2, plus f(1)[x = 1].
    """
    vals = [f(k) for k in range(1, x + 1)]
    shift = 0 if literal else 1
    body = []
    for j in range(2, x + 1):
        inner = _total([t_entry(j - shift, k) * vals[k - 1] for k in range(1, j + 1 - shift)])
        body.append(_p(x - j) * inner)
    if x == 1:
        body.append(vals[0])
    return _total(body)


def type1_factorize(f: Fn, N: int) -> dict:
    """Compare direct T_f against both readings of the factorization for x <= N."""
    direct = [type1_sum(f, x) for x in range(1, N + 1)]
    shifted = [type1_expand(f, x) for x in range(1, N + 1)]
    literal = [type1_expand(f, x, literal=True) for x in range(1, N + 1)]
    second = all(_v(f, n) == _second_rhs(direct, as_fraction(f(1)), n) for n in range(1, N + 1))
    return {
        "direct": direct,
        "factorized": shifted,
        "ok": shifted == direct,
        "second_identity_ok": second,
        "literal_mismatches": [x for x in range(1, N + 1) if literal[x - 1] != direct[x - 1]],
    }


def _second_rhs(T: list, f1: Fraction, n: int) -> Fraction:
    return sum((T[j - 1] * _phat(n - j) for j in range(1, n + 1)), Fraction(0)) - f1 * _phat(n - 1)


def type1_reconstruct(T: list, N: int | None = None, tinv: TriMatrix | None = None) -> list[Fraction]:
    """Recover f(1..N) from T_f(1..N+1).

    f(n) = sum_k t^{-1}(n, k) (sum_j s_j T_f(k + 1 - G_j) - [q^k](q;q)_inf f(1)),
    with f(1) = T_f(1).
    """
    N = len(T) - 1 if N is None else N
    if len(T) < N + 1:
        raise ValueError("need T_f(1..N+1)")
    Tf = [as_fraction(x) for x in T]
    f1 = Tf[0]
    tinv = tinv or t_inverse(N)
    inner = []
    for k in range(1, N + 1):
        acc = sum((s * Tf[k - G] for G, s in _pent(k)), Fraction(0))
        inner.append(acc - _phat(k) * f1)
    return tinv.apply(inner)


def mertens_type1(x: int, *, literal: bool = False) -> complex:
    """M(x) from mu(n) = T_{omega_n}(n) with omega_n(k) = e(k/n), expanded by the factorization.

    ``literal`` omits the n = 1 term, as in the printed summation range.
    """
    start = 2 if literal else 1
    total = [type1_expand(lambda k, n=n: e(k, n), n) for n in range(start, x + 1)]
    return _fsum_c([complex(v) for v in total])


def sigma_via_type1(alpha: int, n: int, tinv: TriMatrix | None = None) -> Fraction:
    """sigma_alpha(n) from coprime power sums T_{Id_alpha} through the inverted expansion."""
    f = lambda d: Fraction(d) ** alpha  # noqa: E731
    T = [type1_sum(f, x) for x in range(1, n + 2)]
    rec = type1_reconstruct(T, n, tinv)
    return sum((rec[d - 1] for d in divisors(n)), Fraction(0))


# ------------------------------------------------------------------ Menon / Toth


def menon_sides(n: int) -> dict:
    f = lambda k: math.gcd(k - 1, n)  # noqa: E731
    lhs = euler_phi(n) * len(divisors(n))
    rhs = type1_sum(f, n)
    expanded = type1_expand(f, n)
    printed = expanded - (f(1) if n == 1 else 0)
    return {"lhs": Fraction(lhs), "rhs": rhs, "expanded": expanded, "printed": printed}


def _mu_conv(f: Fn, n: int) -> Fraction:
    return sum((mobius(d) * as_fraction(f(n // d)) for d in divisors(n)), Fraction(0))


def toth_sides(f: Fn, n: int, *, printed: bool = True) -> dict:
    """Both sides of the gcd(k - 1, n) identity and the expanded divisor sum.

    ``expanded`` is the type I expansion of sum_{(k,n)=1} f(gcd(k-1, n)) over phi(n);
    ``printed`` evaluates the alternative index pattern (k from 0, chi_k(j-k-2-G_i),
    f(gcd(k, n))) that is sometimes quoted for the same divisor sum.
    """
    F = lambda k: _num(f(math.gcd(k - 1, n)))  # noqa: E731
    lhs = type1_sum(F, n)
    ph = euler_phi(n)
    dsum = sum((_mu_conv(f, d) / euler_phi(d) for d in divisors(n)), Fraction(0))
    expanded = type1_expand(F, n) / ph
    if not printed:
        return {"lhs": lhs, "rhs": ph * dsum, "divisor_sum": dsum, "expanded": expanded}
    printed = Fraction(0)
    for j in range(0, n + 1):
        for k in range(0, j - 1):
            for G, s in _pent(j):
                m = j - k - 2 - G
                if m >= 1 and math.gcd(m, k) == 1:
                    printed += s * _p(n - j) * as_fraction(f(math.gcd(k, n)))
    printed = printed / ph + (as_fraction(f(1)) if n == 1 else 0)
    return {"lhs": lhs, "rhs": ph * dsum, "divisor_sum": dsum, "expanded": expanded, "printed": printed}


def toth_invert(f: Fn, n: int) -> Fraction:
    """f(n) rebuilt from the coprime gcd sums S(r) = sum_{(k,r)=1} f(gcd(k-1, r)).

    f(n) = sum_{d|n} phi(d) sum_{r|d} mu(d/r) S(r)/phi(r), with S(r) through the
    type I expansion.
    """
    S: dict[int, Fraction] = {}
    for r in divisors(n):
        Fr = lambda k, r=r: _num(f(math.gcd(k - 1, r)))  # noqa: E731
        S[r] = as_fraction(type1_expand(Fr, r))
    return sum(
        (
            euler_phi(d) * sum((mobius(d // r) * S[r] / euler_phi(r) for r in divisors(d)), Fraction(0))
            for d in divisors(n)
        ),
        Fraction(0),
    )


def mu_product_identity(f: Fn, n: int) -> tuple[Fraction, Fraction]:
    """(sum_{d|n} f(d) mu(d), prod_{p|n} (1 - f(p))) for multiplicative f."""
    lhs = sum((as_fraction(f(d)) * mobius(d) for d in divisors(n)), Fraction(0))
    rhs = Fraction(1)
    for p in factorize(n):
        rhs *= 1 - as_fraction(f(p))
    return lhs, rhs


def menon_toth(check: str, n: int, f: Fn | None = None) -> bool:
    """True when both sides and the factorization-expanded side agree exactly."""
    if check == "menon":
        r = menon_sides(n)
        return r["lhs"] == r["rhs"] == r["expanded"]
    if check == "toth":
        if f is None:
            raise ValueError("toth needs f")
        r = toth_sides(f, n, printed=False)
        return r["lhs"] == r["rhs"] and r["expanded"] == r["divisor_sum"] and toth_invert(f, n) == as_fraction(f(n))
    raise ValueError(f"unknown check {check!r}")


# ------------------------------------------------------------------ type II: polynomials in w


def u_inverse_entry(f: Fn, n: int, k: int) -> Poly:
    """u^{-1}(n, k)(f, w) = sum_m (sum_{d|(m,n)} f(d) p(n/d - k)) w^m."""
    coeffs = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        coeffs[m] = sum((as_fraction(f(d)) * _p(n // d - k) for d in divisors(math.gcd(m, n))), Fraction(0))
    return Poly(coeffs)


def u_inverse(f: Fn, N: int) -> PolyMatrix:
    return PolyMatrix([[u_inverse_entry(f, n, k) for k in range(1, n + 1)] for n in range(1, N + 1)])


def _geom(n: int, step: int) -> Poly:
    """T_n(w^step) = 1 + w^step + ... + w^{step (n-1)}."""
    c = [Fraction(0)] * (step * (n - 1) + 1)
    for i in range(n):
        c[step * i] = Fraction(1)
    return Poly(c)


def lhat(f: Fn, g: Fn, n: int) -> Poly:
    """sum_{d|n} w^d f(d) T_{n/d}(w^d) g(n/d)."""
    out = Poly()
    for d in divisors(n):
        c = as_fraction(f(d)) * as_fraction(g(n // d))
        if c:
            out = out + (Poly.monomial(d, c) * _geom(n // d, d))
    return out


def lhat_direct(f: Fn, g: Fn, n: int) -> Poly:
    """sum_{m=1}^{n} L_{f,g,m}(n) w^m."""
    return Poly([0] + [type2_sum(f, g, m, n) for m in range(1, n + 1)])


def _check_w(w: Fraction, N: int) -> None:
    if w == 0:
        raise SingularW("w = 0")
    if w == 1 or (w == -1 and N >= 2):
        raise SingularW(f"w^k = 1 for some k <= {N}")


def u_matrix(f: Fn, w: object, N: int, *, method: str = "solve") -> TriMatrix:
    """Ordinary type II matrix u(f, w) at a rational w.

    ``solve`` inverts u^{-1} by forward substitution; ``chain`` uses the signed
    chain expansion over strictly increasing index sets.
    """
    w = as_fraction(w)
    _check_w(w, N)
    if as_fraction(f(1)) == 0:
        raise PreconditionFailed("f(1) = 0 makes the diagonal vanish")
    inv = u_inverse(f, N).evaluate(w)
    if method == "solve":
        return inv.inverse()
    if method == "chain":
        return TriMatrix.from_function(lambda n, k: u_entry_chain(f, w, n, k, inv), N)
    raise ValueError(method)


def u_entry_chain(f: Fn, w: Fraction, n: int, k: int, inv: TriMatrix | None = None) -> Fraction:
    """u(n, k) from the closed chain form in the P-hat terms and (1 - w^i) weights."""
    f1 = as_fraction(f(1))
    if n == k:
        return (1 - w) / (w * (1 - w**n) * f1)
    P = (lambda a, b: inv[a, b]) if inv is not None else (lambda a, b: u_inverse_entry(f, a, b)(w))

    total = P(n, k)
    ratio = (w - 1) / (w * f1)
    for m in range(1, n - k):
        acc = Fraction(0)
        for chain in combinations(range(k + 1, n), m):
            path = (k,) + chain + (n,)
            prod = Fraction(1)
            for lo, hi in zip(path, path[1:]):
                prod *= P(hi, lo)
                if not prod:
                    break
            if not prod:
                continue
            den = Fraction(1)
            for i in chain:
                den *= 1 - w**i
            acc += prod / den
        total += ratio**m * acc
    return -((1 - w) ** 2) / (w**2 * (1 - w**n) * (1 - w**k) * f1**2) * total


def fhat(f: Fn, w: Fraction, n: int) -> Fraction:
    """f(n) w^n / (w^n - 1)."""
    wn = w**n
    return as_fraction(f(n)) * wn / (wn - 1)


def u_hat_matrix(f: Fn, w: object, N: int) -> TriMatrix:
    """(w^k - 1) u(n, k)."""
    w = as_fraction(w)
    u = u_matrix(f, w, N)
    return TriMatrix.from_function(lambda n, k: (w**k - 1) * u[n, k], N)


class DfTable:
    """Multiple-convolution functions ds_j(f; n) and D_f(n) over f-hat at a fixed w."""

    def __init__(self, f: Fn, w: object):
        self.w = as_fraction(w)
        _check_w(self.w, 2)
        self.f = f
        self._fh: dict[int, Fraction] = {}
        self._ds: dict[tuple[int, int], Fraction] = {}
        if self.fh(1) == 0:
            raise PreconditionFailed("f(1) = 0")

    def fh(self, n: int) -> Fraction:
        v = self._fh.get(n)
        if v is None:
            v = self._fh[n] = fhat(self.f, self.w, n)
        return v

    def ds(self, j: int, n: int) -> Fraction:
        key = (j, n)
        v = self._ds.get(key)
        if v is not None:
            return v
        if j == 1:
            v = -self.fh(1) if n == 1 else self.fh(n)
        else:
            v = sum((self.fh(d) * self.ds(j - 1, n // d) for d in divisors(n) if d > 1), Fraction(0))
        self._ds[key] = v
        return v

    def D(self, n: int) -> Fraction:
        """sum over even indices 2j <= Omega(n) + 1 of ds_{2j}(n) / f-hat(1)^{2j+1}."""
        f1 = self.fh(1)
        top = (omega_big(n) + 2) // 2
        return sum((self.ds(2 * j, n) / f1 ** (2 * j + 1) for j in range(1, top + 1)), Fraction(0))

    def lemma_sides(self, n: int, *, plain_f: bool = False) -> tuple[Fraction, Fraction]:
        """(sum_{d|n} h(d) D(n/d), -f-hat(n)/f-hat(1) + eps(n)) with h = f-hat, or f if plain_f."""
        h = (lambda d: as_fraction(self.f(d))) if plain_f else self.fh
        lhs = sum((h(d) * self.D(n // d) for d in divisors(n)), Fraction(0))
        return lhs, -self.fh(n) / self.fh(1) + (1 if n == 1 else 0)


def u_hat_closed(f: Fn, w: object, N: int) -> TriMatrix:
    """u-hat(n, k) = sum_j s_j (D_f((n-G_j)/k)[k | n-G_j] + [n-G_j = k]/f-hat(1))."""
    tab = DfTable(f, w)
    f1 = tab.fh(1)

    def entry(n: int, k: int) -> Fraction:
        acc = Fraction(0)
        for G, s in _pent(n - 1):
            m = n - G
            if m % k == 0:
                acc += s * tab.D(m // k)
            if m == k:
                acc += s / f1
        return acc

    return TriMatrix.from_function(entry, N)


def pentagonal_partition_check(tab: DfTable, n: int, k: int, uhat: TriMatrix) -> tuple[Fraction, Fraction]:
    """(sum_i p(i) u-hat(n-i, k), D_f(n/k)[k | n] + [n = k]/f-hat(1))."""
    lhs = sum((_p(i) * uhat[n - i, k] for i in range(0, n - k + 1)), Fraction(0))
    rhs = (tab.D(n // k) if n % k == 0 else 0) + (1 / tab.fh(1) if n == k else 0)
    return lhs, rhs


# ------------------------------------------------------------------ Ramanujan sums


def ramanujan_c(q: int, n: int, method: str = "divisor"):
    """Ramanujan's sum c_q(n).

    ``divisor``: sum_{d|(q,n)} d mu(q/d) (exact int).
    ``exponential``: sum over reduced residues of e(dn/q) (complex).
    ``partition``: sum_k sum_{d|(n,q)} d p(q/d - k) sum_j s_j mu(k - G_j) (exact int).
    ``wcoeff``: coefficient of w^n in sum_k u^{-1}(q, k)(Id, w) sum_j s_j mu(k - G_j), for n <= q.
    """
    if q < 1 or n < 1:
        raise ValueError("q, n >= 1")
    if method == "divisor":
        return sum(d * mobius(q // d) for d in divisors(math.gcd(q, n)))
    if method == "exponential":
        return _fsum_c([e(d * n, q) for d in range(1, q + 1) if math.gcd(d, q) == 1])
    if method == "partition":
        g = math.gcd(n, q)
        tot = 0
        for k in range(1, q + 1):
            inner = sum(s * mobius(k - G) for G, s in _pent(k - 1))
            if inner:
                tot += sum(d * _p(q // d - k) for d in divisors(g)) * inner
        return tot
    if method == "wcoeff":
        if n > q:
            raise ValueError("w-coefficient form needs n <= q")
        ident = lambda d: d  # noqa: E731
        tot = Fraction(0)
        for k in range(1, q + 1):
            inner = sum(s * mobius(k - G) for G, s in _pent(k - 1))
            if inner:
                c = u_inverse_entry(ident, q, k).c
                tot += (c[n] if n < len(c) else 0) * inner
        return int(tot)
    raise ValueError(method)


def type2_expand(f: Fn, g: Fn, m: int, n: int) -> Fraction:
    """L_{f,g,m}(n) = sum_k sum_{d|(m,n)} f(d) p(n/d - k) sum_{j: k > G_j} s_j g(k - G_j)."""
    gd = math.gcd(m, n)
    tot = Fraction(0)
    for k in range(1, n + 1):
        inner = sum((s * as_fraction(g(k - G)) for G, s in _pent(k - 1)), Fraction(0))
        if inner:
            tot += sum((as_fraction(f(d)) * _p(n // d - k) for d in divisors(gd)), Fraction(0)) * inner
    return tot


def sigma_s_truncations(s: int, n: int, checkpoints: list[int]) -> dict:
    """Partial sums of n^s zeta(s+1) sum_{i<=I} c_i(n)/i^{s+1} at the given I."""
    import mpmath

    z = float(mpmath.zeta(s + 1))
    out = {}
    acc = []
    top = max(checkpoints)
    for i in range(1, top + 1):
        acc.append(ramanujan_c(i, n) / i ** (s + 1))
        if i in checkpoints:
            out[i] = n**s * z * math.fsum(acc)
    return {"target": float(sigma(s, n)), "partials": out}


# ------------------------------------------------------------------ gcd Fourier transforms


@dataclass(frozen=True)
class DftContext:
    """Modulus and tolerance for double-precision exponential sums."""

    k: int
    tol: float = 1e-8

    def e(self, num: int) -> complex:
        return e(num, self.k)


def dft_gcd(h: Fn, a: int, n: int, method: str = "direct") -> complex | Fraction:
    """h-hat[a](n) = sum_{k<=n} h(gcd(k, n)) e(ka/n), or (h * c_.(a))(n) with ``convolution``."""
    if method == "direct":
        return _fsum_c([complex(float(as_fraction(h(math.gcd(k, n))))) * e(k * a, n) for k in range(1, n + 1)])
    if method == "convolution":
        return sum((as_fraction(h(n // d)) * _c_any(d, a) for d in divisors(n)), Fraction(0))
    raise ValueError(method)


def _c_any(q: int, a: int) -> int:
    """c_q(a) for any integer a, using gcd(q, 0) = q."""
    return sum(d * mobius(q // d) for d in divisors(math.gcd(q, a)))


def s_k(f: Fn, g: Fn, k: int, n: int) -> Fraction:
    """sum_{d|(n,k)} f(d) g(k/d)."""
    return sum((as_fraction(f(d)) * as_fraction(g(k // d)) for d in divisors(math.gcd(n, k))), Fraction(0))


def fourier_coeffs(f: Fn, g: Fn, k: int) -> list[Fraction]:
    """a_k(f, g; m) = sum_{d|(m,k)} g(d) f(k/d) d/k for m = 1..k."""
    return [
        sum((as_fraction(g(d)) * as_fraction(f(k // d)) * Fraction(d, k) for d in divisors(math.gcd(m, k))), Fraction(0))
        for m in range(1, k + 1)
    ]


def fourier_reconstruct(f: Fn, g: Fn, k: int, n: int, coeffs: list[Fraction] | None = None) -> complex:
    a = coeffs or fourier_coeffs(f, g, k)
    return _fsum_c([float(a[m - 1]) * e(m * n, k) for m in range(1, k + 1)])


def _dft_lhs(f: Fn, g: Fn, k: int) -> complex:
    """sum_{d|k} sum_{r<k} d L_{f,g,r}(k) e(-rd/k) mu(k/d)."""
    L = [complex(float(as_fraction(type2_sum(f, g, r, k)))) for r in range(k)]
    terms = []
    for d in divisors(k):
        mu = mobius(k // d)
        if mu:
            terms.append(d * mu * _fsum_c([L[r] * e(-r * d, k) for r in range(k)]))
    return _fsum_c(terms)


def dft_main_identity(f: Fn, g: Fn, k: int, tol: float = 1e-8) -> dict:
    rhs = sum(
        (euler_phi(d) * as_fraction(f(d)) * (k // d) ** 2 * as_fraction(g(k // d)) for d in divisors(k)), Fraction(0)
    )
    lhs = _dft_lhs(f, g, k)
    resid = abs(lhs - float(rhs))
    scale = max(1.0, abs(float(rhs)))
    return {"k": k, "lhs": lhs, "rhs": rhs, "residual": resid, "ok": resid <= tol * scale}


def y_f(f: Fn):
    """Dirichlet inverse of n -> f(n) phi(n) / n^2."""
    return dirichlet_inverse_fn(lambda n: as_fraction(f(n)) * euler_phi(n) / Fraction(n * n))


def recover_g(f: Fn, L: Callable[[int, int], object], n: int, tol: float = 1e-8) -> tuple[Fraction, float]:
    """g(n) from the sums L(r, d) = L_{f,g,r}(d) and f alone.

    Returns the rounded rational and the rounding residual.
    """
    y = y_f(f)
    terms = []
    for d in divisors(n):
        Ls = [complex(float(as_fraction(L(r, d)))) for r in range(d)]
        inner = []
        for j in divisors(d):
            mu = mobius(d // j)
            if mu:
                inner.append(j * mu * _fsum_c([Ls[r] * e(-r * j, d) for r in range(d)]))
        terms.append(_fsum_c(inner) / (d * d) * float(y(n // d)))
    return _round(_fsum_c(terms), tol)


def _h_dft(d: int) -> complex:
    """sum_r sum_{j|d} j c_d(r) e(-rj/d) mu(d/j) for the Ramanujan-sum case."""
    cs = [_c_any(d, r) for r in range(d)]
    inner = []
    for j in divisors(d):
        mu = mobius(d // j)
        if mu:
            inner.append(j * mu * _fsum_c([cs[r] * e(-r * j, d) for r in range(d)]))
    return _fsum_c(inner)


def mertens_dft(x: int, tol: float = 1e-8) -> tuple[int, float]:
    """M(x) through the Ramanujan-sum DFT expansion; returns (rounded value, residual)."""
    y = dirichlet_inverse_fn(lambda n: Fraction(euler_phi(n), n))
    terms = []
    for d in range(1, x + 1):
        ys = math.fsum(float(y(m)) for m in range(1, x // d + 1))
        terms.append(_h_dft(d) / (d * d) * ys)
    q, r = _round(_fsum_c(terms), tol, 1)
    return int(q), r


def phi_dft(n: int, tol: float = 1e-8) -> tuple[Fraction, float]:
    """phi(n)/n as the divisor sum of the DFT coefficients; returns (rounded, residual)."""
    v = _fsum_c([_h_dft(d) / (d * d) for d in divisors(n)])
    return _round(v, tol, n)


def phi_average_dft(x: int, tol: float = 1e-8) -> tuple[int, float]:
    """sum_{2<=n<=x} phi(n) via the floor-weighted DFT sum."""
    terms = []
    for d in range(1, x + 1):
        K = x // d
        terms.append(_h_dft(d) / (2 * d) * (K * (K - 1)))
    q, r = _round(_fsum_c(terms), tol, 1)
    return int(q), r


def interchange_divisor(h: Fn, u: Fn, v: Fn, n: int) -> tuple[Fraction, Fraction]:
    """sum_{k<=n} sum_{d|k} h(d) u(k/d) v(k) against sum_{d<=n} h(d) sum_{k<=n/d} u(k) v(dk)."""
    F = as_fraction
    lhs = sum((F(h(d)) * F(u(k // d)) * F(v(k)) for k in range(1, n + 1) for d in divisors(k)), Fraction(0))
    rhs = sum(
        (F(h(d)) * sum((F(u(k)) * F(v(d * k)) for k in range(1, n // d + 1)), Fraction(0)) for d in range(1, n + 1)),
        Fraction(0),
    )
    return lhs, rhs


def interchange_gcd(f: Fn, g: Fn, h: Fn, x: int) -> tuple[Fraction, Fraction]:
    """sum_{d<=x} f(d) sum_{r|(d,x)} g(r) h(d/r) against sum_{r|x} g(r) sum_{d<=x/r} h(d) f(gcd(x,r) d)."""
    F = as_fraction
    lhs = sum(
        (F(f(d)) * sum((F(g(r)) * F(h(d // r)) for r in divisors(math.gcd(d, x))), Fraction(0)) for d in range(1, x + 1)),
        Fraction(0),
    )
    rhs = sum(
        (
            F(g(r)) * sum((F(h(d)) * F(f(math.gcd(x, r) * d)) for d in range(1, x // r + 1)), Fraction(0))
            for r in divisors(x)
        ),
        Fraction(0),
    )
    return lhs, rhs

