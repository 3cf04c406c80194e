"""Floating-point correlation statistics between an OGF and an inverse kernel.

Summation is deterministic: every total is an exactly rounded ``math.fsum``
over the full list of terms, so the result does not depend on the order in
which (possibly threaded) workers produced them.
"""

from __future__ import annotations

import bisect
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import numpy as np

from .arithfn import mobius, omega_small as omega
from .errors import DegenerateRow, PreconditionFailed, ZeroConstantTerm
from .pseries import Series, as_fraction
from .trimatrix import TriMatrix

MERTENS_B = 0.2614972128476428

KernelFn = Callable[[int, int], object]


@dataclass(frozen=True)
class CorrConfig:
    """Truncation and input echo for a correlation computation."""

    statistic: str
    N: int
    params: Mapping[str, object] = field(default_factory=dict)
    truncation: str = "square"
    precision: str = "float64"


@dataclass(frozen=True)
class CorrReport:
    statistic: str
    value: float
    partials: list[tuple[int, float]]
    config: CorrConfig
    converged: bool = True
    extrapolated: float | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["config"]["params"] = dict(self.config.params)
        return d


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GFKIT_THREADS", "1")))
    except ValueError:
        return 1


# ------------------------------------------------------------------ row statistics


def _coeffs(C: Series | Sequence[object]) -> list[float]:
    return [float(x) for x in (C.coeffs if isinstance(C, Series) else C)]


def corr_n(C: Series | Sequence[object], Dinv: KernelFn, n: int) -> float:
    """Corr(n; C, D) with the leading 1/n factor included."""
    c = _coeffs(C)
    if len(c) <= n:
        raise IndexError(f"need c_1..c_{n}")
    cs = c[1 : n + 1]
    ds = [float(Dinv(n, k)) for k in range(1, n + 1)]
    vc = math.fsum(x * x for x in cs)
    vd = math.fsum(x * x for x in ds)
    if vc == 0 or vd == 0:
        raise DegenerateRow(f"zero variance in row {n}")
    num = math.fsum(abs(a * b) for a, b in zip(cs, ds))
    return num / (n * math.sqrt(vc) * math.sqrt(vd))


def corr_total(C: Series | Sequence[object], Dinv: KernelFn, N: int) -> CorrReport:
    """Partial sums of Corr(n; C, D) for n <= N; degenerate rows are skipped and listed."""
    terms: list[float] = []
    partials: list[tuple[int, float]] = []
    skipped: list[int] = []
    for n in range(1, N + 1):
        try:
            terms.append(corr_n(C, Dinv, n))
        except DegenerateRow:
            skipped.append(n)
        partials.append((n, math.fsum(terms)))
    notes = [f"skipped degenerate rows: {skipped}"] if skipped else []
    return CorrReport("Corr", partials[-1][1] if partials else 0.0, partials, CorrConfig("Corr", N), notes=notes)


def kernel_inverse(D: KernelFn, N: int) -> TriMatrix:
    """Exact D^{-1} for a lower-triangular kernel."""
    return TriMatrix.from_function(D, N).inverse()


def divisor_mobius_inverse(n: int, k: int) -> int:
    """mu(n/k)[k | n], the inverse of the divisor kernel [k | n]."""
    return mobius(n // k) if n % k == 0 else 0


def rho(C: Series | Sequence[object], N: int, *, include_zero: bool = True) -> float:
    """Partial variance: sqrt of the sum of c_m^2 over m <= N (from m = 0 by default)."""
    c = _coeffs(C)
    return math.sqrt(math.fsum(x * x for x in c[(0 if include_zero else 1) : N + 1]))


def a0(C: Series | Sequence[object], delta: float, N: int) -> float:
    """rho_C(N) / N^delta with rho summed over 1 <= n <= N."""
    if delta <= 0:
        raise PreconditionFailed("delta must be positive")
    return rho(C, N, include_zero=False) / N**delta


# ------------------------------------------------------------------ C_{a,b}


def cab_terms(a: int, b: int, limit: int) -> dict[int, int]:
    """Sparse coefficients of sum_n (-1)^n q^{n(an+b)/2} up to q^limit.

    ``(1, 0)`` is read as the theta series sum_n (-1)^n q^{n^2}, since n^2/2 is not integral.
    """
    if (a, b) == (1, 0):
        a = 2
    elif not (a >= 1 and 0 <= b < a):
        raise PreconditionFailed("need a >= 1 and 0 <= b < a")
    out: dict[int, int] = {}
    n = 0
    while True:
        hit = False
        for m in ((0,) if n == 0 else (n, -n)):
            e2 = m * (a * m + b)
            if e2 % 2:
                continue
            e = e2 // 2
            if e <= limit:
                out[e] = out.get(e, 0) + (-1) ** abs(m)
                hit = True
        if not hit and n > 0 and n * (a * n - b) > 2 * limit:
            break
        n += 1
    return {e: v for e, v in sorted(out.items()) if v}


def cab_series(a: int, b: int, N: int) -> Series:
    c = [0] * (N + 1)
    for e, v in cab_terms(a, b, N).items():
        c[e] = v
    return Series.from_ints(c)


class _SparseRho:
    """rho_C(m) for large m from sparse coefficients."""

    def __init__(self, terms: Mapping[int, float], include_zero: bool):
        keys = sorted(k for k in terms if include_zero or k > 0)
        self.keys = keys
        cum, acc = [], 0.0
        for k in keys:
            acc += float(terms[k]) ** 2
            cum.append(acc)
        self.cum = np.array(cum)
        self.karr = np.array(keys)

    def __call__(self, m: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.karr, m, side="right") - 1
        return np.sqrt(np.where(idx >= 0, self.cum[np.maximum(idx, 0)], 0.0))


def omega_table(M: int) -> np.ndarray:
    """omega(m) for 0 <= m <= M by a prime sieve."""
    w = np.zeros(M + 1, dtype=np.int8)
    is_p = np.ones(M + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(M) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    for p in np.flatnonzero(is_p):
        w[p::p] += 1
    return w


def squarefree_table(M: int) -> np.ndarray:
    s = np.ones(M + 1, dtype=bool)
    s[0] = False
    for p in range(2, math.isqrt(M) + 1):
        s[p * p :: p * p] = False
    return s


def _lgf_terms(
    terms: Mapping[int, float], N: int, *, hat: int | None, include_zero: bool, W: np.ndarray, SF: np.ndarray
) -> tuple[list[int], list[np.ndarray]]:
    rho_fn = _SparseRho(terms, include_zero)
    js = np.flatnonzero(SF[: N + 1])
    ks = [k for k in sorted(terms) if 1 <= k <= N]

    def one(k: int) -> np.ndarray:
        m = js * k
        r = rho_fn(m)
        expo = W[m].astype(float)
        if hat is not None:
            big = (js >= 16) & (k >= 16)
            mm = m[big].astype(float)
            expo[big] = (hat + 4) / hat**2 * (np.log(np.log(mm)) + MERTENS_B)
        return abs(float(terms[k])) / (m * r * np.sqrt(2.0) ** expo)

    nt = _threads()
    if nt > 1:
        with ThreadPoolExecutor(nt) as ex:
            arrs = list(ex.map(one, ks))
    else:
        arrs = [one(k) for k in ks]
    return ks, arrs


def _square_partial(ks: list[int], arrs: list[np.ndarray], js: np.ndarray, M: int) -> float:
    cut = int(np.searchsorted(js, M, side="right"))
    return math.fsum(math.fsum(a[:cut].tolist()) for k, a in zip(ks, arrs) if k <= M)


def _aitken(s1: float, s2: float, s3: float) -> float | None:
    d1, d2 = s2 - s1, s3 - s2
    den = d2 - d1
    if den == 0 or d1 == 0:
        return None
    return s3 - d2 * d2 / den


def corr_lgf(
    a: int,
    b: int,
    N: int = 2000,
    *,
    hat: bool = False,
    include_zero: bool = True,
    checkpoints: Sequence[int] | None = None,
    tol: float = 1e-3,
) -> CorrReport:
    """Square-truncated double series sum_{j,k <= N} mu^2(j)|c_k| / (jk rho(jk) sqrt2^omega(jk)) for C_{a,b}.

    ``hat`` replaces omega(jk) for j, k >= 16 by the average-order formula.
    ``converged`` is true when the last doubling of N moved the value by less than ``tol``.
    """
    terms = cab_terms(a, b, N * N)
    W = omega_table(N * N)
    SF = squarefree_table(N)
    ks, arrs = _lgf_terms(terms, N, hat=(a if hat else None), include_zero=include_zero, W=W, SF=SF)
    js = np.flatnonzero(SF[: N + 1])
    cps = sorted(set(checkpoints or [max(1, N >> s) for s in range(6, -1, -1)]) | {N})
    partials = [(M, _square_partial(ks, arrs, js, M)) for M in cps]
    value = partials[-1][1]
    conv = len(partials) < 2 or abs(value - partials[-2][1]) < tol
    extra = _aitken(*(p for _, p in partials[-3:])) if len(partials) >= 3 else None
    name = "Corr_LGF_hat" if hat else "Corr_LGF"
    notes = [] if conv else [f"not converged: last doubling moved the value by {abs(value - partials[-2][1]):.3g}"]
    cfg = CorrConfig(name, N, {"a": a, "b": b, "include_zero": include_zero, "tol": tol})
    return CorrReport(name, value, partials, cfg, conv, extra, notes)


def corr_lgf_reference(a: int, b: int, N: int, *, include_zero: bool = True) -> float:
    """Term-by-term pure-Python evaluation of the same truncated series (independent route)."""
    terms = cab_terms(a, b, N * N)
    keys = sorted(k for k in terms if include_zero or k > 0)

    def rho_at(m: int) -> float:
        i = bisect.bisect_right(keys, m)
        return math.sqrt(sum(float(terms[k]) ** 2 for k in keys[:i]))

    out = []
    for k in sorted(terms):
        if not 1 <= k <= N:
            continue
        for j in range(1, N + 1):
            if mobius(j) == 0:
                continue
            m = j * k
            out.append(abs(terms[k]) / (m * rho_at(m) * math.sqrt(2.0) ** omega(m)))
    return math.fsum(out)


# ------------------------------------------------------------------ average order of omega


def omega_avg_order(a: int, b: int, x: float) -> dict[str, float]:
    """Empirical mean of omega(p(n)) + omega(p(-n)), p(n) = n(an+b)/2, over p(n) <= x.

    Compared against both the stated constant (a+4)/a^2 and the derivation's
    prefactor (1/2) sqrt(8/a) (1 + 4/a), each multiplying log log x + B.
    """
    if not (a >= 1 and 0 <= b < a):
        raise PreconditionFailed("need a >= 1 and 0 <= b < a")
    vals = []
    n = 1
    while n * (a * n + b) <= 2 * x:
        vals.append(omega(n * (a * n + b) // 2) + omega(n * (a * n - b) // 2))
        n += 1
    if not vals:
        raise PreconditionFailed(f"no n with n(an+b)/2 <= {x}")
    mean = math.fsum(vals) / len(vals)
    L = math.log(math.log(x)) + MERTENS_B
    lemma = (a + 4) / a**2 * L
    proof = 0.5 * math.sqrt(8 / a) * (1 + 4 / a) * L
    return {"count": len(vals), "empirical": mean, "lemma": lemma, "ratio": mean / lemma, "proof": proof, "proof_ratio": mean / proof}


# ------------------------------------------------------------------ conjectured OGFs


def conjectured_ogf(D: KernelFn, N: int, variant: str = "product-inverse", *, literal: bool = False) -> Series:
    """Candidate optimal C(q) to order N.

    ``product-inverse``: prod_k (sum_{n>=0} D(n+k, k) q^n)^{-1}; ``literal`` uses
    D(n+k-1, k), whose constant term D(k-1, k) vanishes for k >= 2.
    ``euler-exp``: exp(-sum_n sum_k k D(n,k) q^n / n).
    ``euler-product``: prod_n (1 + q sum_k k D(n,k))^{-1}, the second printed form.
    """
    if variant == "product-inverse":
        out = Series.one(N)
        shift = -1 if literal else 0
        for k in range(1, N + 1):
            col = Series([as_fraction(D(n + k + shift, k)) if n + k + shift >= k else 0 for n in range(N + 1)], N)
            if col[0] == 0:
                raise ZeroConstantTerm(f"column factor {k} has zero constant term")
            out = out * col.recip()
        return out
    sums = [sum((k * as_fraction(D(n, k)) for k in range(1, n + 1)), Fraction(0)) for n in range(1, N + 1)]
    if variant == "euler-exp":
        return (-Series([0] + [s / n for n, s in enumerate(sums, 1)], N)).exp()
    if variant == "euler-product":
        out = Series.one(N)
        for s in sums:
            out = out * (Series.monomial(1, N, s) + 1).recip()
        return out
    raise ValueError(variant)


def _signed_row(xs: Sequence[float], ys: Sequence[float], n: int) -> float | None:
    vx = math.fsum(x * x for x in xs)
    vy = math.fsum(y * y for y in ys)
    if vx == 0 or vy == 0:
        return None
    return math.fsum(x * y for x, y in zip(xs, ys)) / (n * math.sqrt(vx * vy))


def corr12_compare(C: Series, D: KernelFn, N: int) -> dict[str, object]:
    """Corr_1 (c_k against D^{-1}) and Corr_2 (p_k against D) partial sums side by side."""
    Dinv = kernel_inverse(D, N)
    P = C.truncate(N).recip()
    c = _coeffs(C)
    p = _coeffs(P)
    r1, r2, skipped = [], [], []
    trace = []
    for n in range(1, N + 1):
        a = _signed_row(c[1 : n + 1], [float(Dinv[n, k]) for k in range(1, n + 1)], n)
        b = _signed_row(p[1 : n + 1], [float(as_fraction(D(n, k))) for k in range(1, n + 1)], n)
        if a is None or b is None:
            skipped.append(n)
        r1.append(a or 0.0)
        r2.append(b or 0.0)
        trace.append((n, math.fsum(r1), math.fsum(r2)))
    return {"N": N, "corr1": trace[-1][1], "corr2": trace[-1][2], "trace": trace, "skipped": skipped}


# ------------------------------------------------------------------ summatory probe


def m_dk(D: KernelFn, k: int, x: int, *, inverse: TriMatrix | None = None) -> Fraction:
    """M_{D,k}(x) = sum_{n <= x} D^{-1}(n, k)."""
    if not 1 <= k <= x:
        raise PreconditionFailed("need 1 <= k <= x")
    inv = inverse if inverse is not None and inverse.size >= x else kernel_inverse(D, x)
    return sum((inv[n, k] for n in range(k, x + 1)), Fraction(0))


def delta_estimate(D: KernelFn, xmax: int, *, inverse: TriMatrix | None = None) -> dict[str, object]:
    """Least-squares log-log slope of max_k |M_{D,k}(x)| over x in [xmax/8, xmax]; delta = slope^2.

    An experimental probe: the slope of a finite window says nothing certain
    about the infimum exponent.
    """
    inv = inverse if inverse is not None and inverse.size >= xmax else kernel_inverse(D, xmax)
    col = [Fraction(0)] * (xmax + 1)
    series = []
    for x in range(1, xmax + 1):
        for k in range(1, x + 1):
            col[k] += inv[x, k]
        series.append(max(abs(float(v)) for v in col[1 : x + 1]))
    lo = max(2, xmax // 8)
    pts = [(math.log(x), math.log(series[x - 1])) for x in range(lo, xmax + 1) if series[x - 1] > 0]
    if len(pts) < 2:
        return {"xmax": xmax, "slope": None, "delta": None, "maxima": series}
    mx = math.fsum(p[0] for p in pts) / len(pts)
    my = math.fsum(p[1] for p in pts) / len(pts)
    sxy = math.fsum((u - mx) * (v - my) for u, v in pts)
    sxx = math.fsum((u - mx) ** 2 for u, _ in pts)
    slope = sxy / sxx
    return {"xmax": xmax, "slope": slope, "delta": slope * slope, "maxima": series}
