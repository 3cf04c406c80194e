"""Partition convolution transforms of Dirichlet inverses and their sign profiles.

Four transforms of an arithmetic function f, each a Cauchy convolution with
a partition-type sequence (p1: distinct parts, p2: its reciprocal, p and
p-hat: Euler's pair):

    s1[f](n)    = sum_j f(j) p1(n-j)
    s2[f](n)    = (-1)^n sum_j f(j) p2(n-j)
    s1hat[f](n) = sum_j f(j) phat(n-j)
    s2hat[f](n) = (-1)^n sum_j f(j) p(n-j)

Since p1 * p2 = 1 and p * phat = 1 as series, each transform is undone by
convolving with the partner sequence (``decode``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Sequence

from ._signtables import PRINTED
from .arithfn import (
    dirichlet_inverse_fn,
    dirichlet_inverse_real,
    euler_phi,
    liouville,
    mangoldt,
    mobius,
    omega_big,
    omega_small,
    prime_pi,
    sigma,
)
from .errors import NotInvertible, PreconditionFailed
from .pseries import as_fraction, partitions_list

KINDS = ("s1", "s2", "s1hat", "s2hat")
_KERNEL = {"s1": ("P1", "P2"), "s2": ("P2", "P1"), "s1hat": ("PHAT", "P"), "s2hat": ("P", "PHAT")}
_SIGNED = {"s1": False, "s2": True, "s1hat": False, "s2hat": True}


def _check_kind(kind: str) -> None:
    if kind not in _KERNEL:
        raise ValueError(f"kind must be one of {KINDS}")


def _values(f: Callable[[int], object] | Sequence[object], n: int, exact: bool) -> list:
    conv = as_fraction if exact else float
    if callable(f):
        return [conv(f(j)) for j in range(1, n + 1)]
    if len(f) < n:
        raise IndexError(f"need {n} values")
    return [conv(x) for x in f[:n]]


def transform_values(kind: str, f: Callable[[int], object] | Sequence[object], N: int, *, exact: bool = True) -> list:
    """[T[f](1), ..., T[f](N)] for T the named transform."""
    _check_kind(kind)
    ker = partitions_list(_KERNEL[kind][0], N)
    fv = _values(f, N, exact)
    zero = Fraction(0) if exact else 0.0
    out = []
    for n in range(1, N + 1):
        acc = sum((fv[j - 1] * ker[n - j] for j in range(1, n + 1)), zero) if exact else math.fsum(
            fv[j - 1] * ker[n - j] for j in range(1, n + 1)
        )
        out.append(-acc if _SIGNED[kind] and n % 2 else acc)
    return out


def transform(kind: str, f: Callable[[int], object], n: int) -> Fraction:
    """Single value T[f](n), n >= 1."""
    if n < 1:
        raise PreconditionFailed("n must be positive")
    return transform_values(kind, f, n)[-1]


def decode(kind: str, t: Sequence[object], *, exact: bool = True) -> list:
    """Recover f(1..N) from T[f](1..N)."""
    _check_kind(kind)
    N = len(t)
    ker = partitions_list(_KERNEL[kind][1], N)
    conv = as_fraction if exact else float
    tv = [conv(x) for x in t]
    if _SIGNED[kind]:
        tv = [-x if j % 2 else x for j, x in enumerate(tv, 1)]
    zero = Fraction(0) if exact else 0.0
    return [sum((tv[j - 1] * ker[n - j] for j in range(1, n + 1)), zero) for n in range(1, N + 1)]


# ------------------------------------------------------------------ sign profiles


def _sgn(x: object) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SignProfile:
    """Signs of a transform up to a horizon, with the last observed sign change.

    ``last_change`` is the largest n <= H whose sign differs from the sign at H
    (zeros count as a differing sign); None when the sign is constant from n = 1.
    It is an observation within the horizon, not a bound.
    """

    kind: str
    horizon: int
    signs: tuple[int, ...]
    last_change: int | None
    tail_sign: int
    values: tuple = field(repr=False, default=())


def sign_profile_of(kind: str, values: Sequence[object]) -> SignProfile:
    signs = tuple(_sgn(v) for v in values)
    H = len(signs)
    tail = signs[-1] if signs else 0
    last = None
    for n in range(H, 0, -1):
        if signs[n - 1] != tail:
            last = n
            break
    return SignProfile(kind, H, signs, last, tail, tuple(values))


def _inverse_values(f: Callable[[int], object], H: int) -> list:
    v1 = f(1)
    if v1 == 0:
        raise NotInvertible("f(1) = 0")
    if isinstance(v1, float):
        return dirichlet_inverse_real(f, H)[1:]
    inv = dirichlet_inverse_fn(f)
    return [inv(n) for n in range(1, H + 1)]


def sign_profile(kind: str, f: Callable[[int], object], H: int) -> SignProfile:
    """Profile of T[f^{-1}](1..H) with f^{-1} the Dirichlet inverse."""
    if H < 16:
        raise PreconditionFailed("horizon must be at least 16")
    inv = _inverse_values(f, H)
    return sign_profile_of(kind, transform_values(kind, inv, H, exact=not isinstance(inv[0], float)))


def _alternates(profile: SignProfile) -> int | None:
    """Last n at which sgn(T(n)) differs from (-1)^{n+1}; None if it never does."""
    for n in range(profile.horizon, 0, -1):
        if profile.signs[n - 1] != (1 if n % 2 else -1):
            return n
    return None


def conjecture_probe(f: Callable[[int], object], H: int = 200, *, sample: int | None = None) -> dict:
    """Observed sign behaviour of f^{-1} under the four transforms.

    The clauses predict an eventually constant sign for s1 and s2 of f^{-1},
    with the eventual sign tied to sgn f(1): for f of constant sign, s1 tends
    to -sgn f(1) and s2 to +sgn f(1); for f of oscillating sign, the reverse.
    The hat transforms are checked for the alternating pattern (-1)^{n+1}.
    """
    vals = [f(n) for n in range(1, (sample or H) + 1)]
    signs = {_sgn(v) for v in vals}
    oscillating = {-1, 1} <= signs
    s = _sgn(f(1))
    prof = {k: sign_profile(k, f, H) for k in KINDS}
    want1, want2 = (s, -s) if oscillating else (-s, s)
    clause1, clause2 = "s1_sign", "s2_sign"
    settle = H // 2
    report = {
        "horizon": H,
        "oscillating": oscillating,
        clause1: {
            "expected_sign": want1,
            "tail_sign": prof["s1"].tail_sign,
            "last_change": prof["s1"].last_change,
            "holds": prof["s1"].tail_sign == want1 and (prof["s1"].last_change or 0) < settle,
        },
        clause2: {
            "expected_sign": want2,
            "tail_sign": prof["s2"].tail_sign,
            "last_change": prof["s2"].last_change,
            "holds": prof["s2"].tail_sign == want2 and (prof["s2"].last_change or 0) < settle,
        },
    }
    last_alt = _alternates(prof["s2hat"])
    report["s2hat_parity"] = {"last_violation": last_alt, "holds": (last_alt or 0) < settle}
    return report


# ------------------------------------------------------------------ the ten printed tables


def _pi_eps(n: int) -> int:
    return prime_pi(n) + (1 if n == 1 else 0)


def _lambda_eps(n: int) -> float:
    return 1.0 if n == 1 else mangoldt(n)


FUNCTIONS: dict[str, Callable[[int], object]] = {
    "phi": euler_phi,
    "omega+1": lambda n: omega_small(n) + 1,
    "d": lambda n: sigma(0, n),
    "sigma": lambda n: sigma(1, n),
    "pi+eps": _pi_eps,
    "Omega+1": lambda n: omega_big(n) + 1,
    "Lambda+eps": _lambda_eps,
    "alternating": lambda n: -1 if n % 2 else 1,
    "mu": mobius,
    "lambda": liouville,
}

TABLE_FUNCTIONS: dict[int, tuple[str, str]] = {
    1: ("phi", "omega+1"),
    2: ("d", "sigma"),
    3: ("pi+eps", "Omega+1"),
    4: ("Lambda+eps", "alternating"),
    5: ("mu", "lambda"),
}

TABLE_IDS = tuple(f"{fam}-{i}" for fam in ("smooth", "nonsmooth") for i in range(1, 6))


def _parse_table_id(table_id: str) -> tuple[tuple[str, str], tuple[str, str], int]:
    fam, _, idx = table_id.partition("-")
    if fam not in ("smooth", "nonsmooth") or not idx.isdigit() or int(idx) not in TABLE_FUNCTIONS:
        raise KeyError(f"unknown table id {table_id!r}; choose from {TABLE_IDS}")
    kinds = ("s1", "s2") if fam == "smooth" else ("s1hat", "s2hat")
    rows = 32 if table_id == "nonsmooth-5" else 16
    return TABLE_FUNCTIONS[int(idx)], kinds, rows


def table_dump(table_id: str, rows: int | None = None) -> list[tuple]:
    """Rows (n, f1^{-1}(n), T1, T2, f2^{-1}(n), T1, T2) regenerated from the definitions."""
    (n1, n2), (k1, k2), default = _parse_table_id(table_id)
    R = rows or default
    cols = []
    for name in (n1, n2):
        f = FUNCTIONS[name]
        inv = _inverse_values(f, R)
        exact = not isinstance(inv[0], float)
        cols.append((inv, transform_values(k1, inv, R, exact=exact), transform_values(k2, inv, R, exact=exact)))
    return [(n,) + tuple(c[i][n - 1] for c in cols for i in range(3)) for n in range(1, R + 1)]


def printed_table(table_id: str) -> list[tuple[str, ...]]:
    _parse_table_id(table_id)
    return [tuple(r) for r in PRINTED[table_id]]


def _printed_tolerance(text: str) -> float:
    """One unit in the last printed decimal place."""
    exp = Decimal(text).as_tuple().exponent
    return 10.0 ** exp if isinstance(exp, int) and exp < 0 else 0.0


@dataclass(frozen=True)
class TableCheck:
    table_id: str
    cells: int
    mismatches: list[tuple[int, int, str, object]]
    max_residual: float

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_table(table_id: str) -> TableCheck:
    """Regenerated vs printed: integers exactly, decimals within one unit of the last printed digit."""
    printed = printed_table(table_id)
    ours = table_dump(table_id, len(printed))
    bad = []
    worst = 0.0
    cells = 0
    for prow, orow in zip(printed, ours):
        for j, (p, o) in enumerate(zip(prow, orow)):
            cells += 1
            if "." in p:
                r = abs(float(o) - float(p))
                worst = max(worst, r)
                if r > _printed_tolerance(p) * (1 + 1e-9):
                    bad.append((int(prow[0]), j, p, o))
            elif as_fraction(o) != int(p):
                bad.append((int(prow[0]), j, p, o))
    return TableCheck(table_id, cells, bad, worst)
