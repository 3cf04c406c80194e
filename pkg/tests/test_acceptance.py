"""Acceptance criteria 1-11, one recorded PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines inline; they
are also repeated in the terminal summary.
"""

from __future__ import annotations

import json
import math
import os
import random
import shutil
import subprocess
import sys
import time
from fractions import Fraction

import pytest
from conftest import big_omega, divisors, lower_inverse, mobius, omega, phi

from gfkit import _printed, tables
from gfkit import arithfn as af
from gfkit import corrstat as cs
from gfkit import gcdsums as gs
from gfkit import genconv as gc
from gfkit import lgf
from gfkit import signsmooth as ss
from gfkit.pseries import Series, lambert_series, pochhammer

A5_PRINTED = [[1], [0, 1], [-1, -1, 1], [-1, 0, -1, 1], [-1, -1, -1, -1, 1]]
A5_INV_PRINTED = [[1], [0, 1], [1, 1, 1], [2, 1, 1, 1], [4, 3, 2, 1, 1]]
CORR_TARGETS = {(3, 1): 0.92008, (1, 0): 0.7634}
SEED = 7


def rand_fn(rng: random.Random, N: int):
    v = [rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(N - 1)]
    return lambda n: v[n - 1] if n <= N else 0


def rand_kernel(rng: random.Random, N: int):
    tab = {(n, k): rng.randint(1, 9) for n in range(1, N + 1) for k in range(1, n + 1)}
    return lambda n, k: tab.get((n, k), 0)


def pentagonal_oracle(N: int) -> dict[int, int]:
    out = {}
    k = 0
    while True:
        hit = False
        for j in ((0,) if k == 0 else (k, -k)):
            G = j * (3 * j - 1) // 2
            if G <= N:
                out[G] = (-1) ** abs(j)
                hit = True
        if not hit:
            return out
        k += 1


def test_criterion_1(record):
    t0 = time.perf_counter()
    E = pochhammer(1, 1, "-", 1000)
    dt = time.perf_counter() - t0
    want = pentagonal_oracle(1000)
    ok = all(E[n] == want.get(n, 0) for n in range(1001)) and dt < 1.0
    record(1, ok, f"(q;q) to N = 1000 has {len(want)} nonzero coefficients, all +-1 at pentagonal indices; {dt:.3f} s")
    assert ok


def test_criterion_2(record):
    t0 = time.perf_counter()
    E = lgf.euler_product(60)
    mats_ok = all(
        lgf.snk(E, n).as_ints() == _printed.A_MATRICES[n] and lgf.snk_inverse_closed(n).as_ints() == _printed.A_INVERSES[n]
        for n in range(1, 6)
    )
    mats_ok &= _printed.A_MATRICES[5] == A5_PRINTED and _printed.A_INVERSES[5] == A5_INV_PRINTED
    S = lgf.snk(E, 60)
    closed_ok = lgf.snk_inverse_closed(60) == S.inverse() and lgf.snk_inverse_closed(60).rows() == lower_inverse(S.rows())
    dt = time.perf_counter() - t0
    ok = mats_ok and closed_ok and dt < 5
    record(2, ok, f"A_1..A_5 and inverses match the printed table: {mats_ok}; closed s^-1 = exact inverse at N = 60: {closed_ok}; {dt:.2f} s")
    assert ok


def test_criterion_3(record):
    t0 = time.perf_counter()
    N = 200
    checks = {
        "mu -> q": lambert_series(mobius, N) == Series.monomial(1, N),
        "phi -> q/(1-q)^2": lambert_series(phi, N) == Series.monomial(1, N) * Series([1, -1] + [0] * (N - 1)) ** -2,
        "lambda -> squares": lambert_series(lambda n: (-1) ** big_omega(n), N) == Series([int(math.isqrt(n) ** 2 == n and n > 0) for n in range(N + 1)]),
        "|mu| -> 2^omega": lambert_series(lambda n: abs(mobius(n)), N) == Series([0] + [2 ** omega(n) for n in range(1, N + 1)]),
    }
    for t in (1, 2, 3):
        checks[f"J_{t} -> n^{t}"] = lambert_series(lambda n, t=t: af.jordan(t, n), N) == Series([0] + [n**t for n in range(1, N + 1)])
    dt = time.perf_counter() - t0
    ok = all(checks.values()) and dt < 5
    record(3, ok, f"{sum(checks.values())}/{len(checks)} classical Lambert identities exact to N = 200; {dt:.2f} s")
    assert ok


def test_criterion_4(record):
    t0 = time.perf_counter()
    mu_ok = gs.mu_triangle(17).rows() == _printed.MU_TRIANGLE
    t_ok = gs.t_matrix(len(_printed.T_MATRIX)).as_ints() == _printed.T_MATRIX
    tinv_ok = gs.t_inverse(len(_printed.T_INVERSE)).as_ints() == _printed.T_INVERSE
    fig_ok = all(tables.build_table(t).meta["matches_printed"] for t in ("mu-triangle", "t-matrix"))
    type1 = {}
    for name, f in (("1", lambda n: 1), ("Id", lambda n: n), ("mu", mobius)):
        res = gs.type1_factorize(f, 100)
        direct = [sum(Fraction(f(d)) for d in range(1, x + 1) if math.gcd(d, x) == 1) for x in range(1, 101)]
        type1[name] = res["ok"] and res["factorized"] == direct
    menon = all(gs.menon_toth("menon", n) for n in range(1, 201))
    f = rand_fn(random.Random(SEED), 200)
    toth = all(gs.menon_toth("toth", n, f) for n in range(1, 201))
    dt = time.perf_counter() - t0
    ok = mu_ok and t_ok and tinv_ok and fig_ok and all(type1.values()) and menon and toth and dt < 10
    record(
        4,
        ok,
        f"mu (N=17), t and t^-1 (N=13) match printed figures: {mu_ok and t_ok and tinv_ok}; "
        f"type I to x = 100 for 1, Id, mu: {all(type1.values())}; Menon/Toth n <= 200: {menon}/{toth}; {dt:.2f} s",
    )
    assert ok


def test_criterion_5(record):
    t0 = time.perf_counter()
    fns = {"Id": lambda n: n, "1": lambda n: 1, "phi": phi}
    ws = (Fraction(2), Fraction(1, 2), Fraction(-3, 5))
    orth = all((gs.u_matrix(f, w, 25) @ gs.u_inverse(f, 25).evaluate(w)).is_identity() for f in fns.values() for w in ws)
    rng = random.Random(SEED)
    g = rand_fn(rng, 25)
    closed = all(gs.u_hat_closed(g, w, 25) == gs.u_hat_matrix(g, w, 25) for w in ws)
    closed &= all(gs.u_hat_closed(f, w, 25) == gs.u_hat_matrix(f, w, 25) for f in fns.values() for w in ws)
    bad = 0
    for q in range(1, 51):
        for n in range(1, 51):
            c = gs.ramanujan_c(q, n)
            ex = gs.ramanujan_c(q, n, "exponential")
            forms = {c, gs.ramanujan_c(q, n, "partition")}
            if n <= q:
                forms.add(gs.ramanujan_c(q, n, "wcoeff"))
            bad += len(forms) != 1 or abs(ex - c) > 1e-9
    dt = time.perf_counter() - t0
    ok = orth and closed and bad == 0 and dt < 30
    record(5, ok, f"u u^-1 = I for 3 f x 3 w at N = 25: {orth}; u-hat closed form via D_f: {closed}; Ramanujan forms disagree at {bad} of 2500 (q, n); {dt:.2f} s")
    assert ok


def test_criterion_6(record):
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    worst, exact = 0.0, True
    for _ in range(5):
        f, g = rand_fn(rng, 60), rand_fn(rng, 60)
        for k in range(1, 61):
            res = gs.dft_main_identity(f, g, k)
            rhs = res["rhs"]
            rhs_direct = sum(Fraction(phi(d) * f(d) * (k // d) ** 2 * g(k // d)) for d in divisors(k))
            scale = max(1.0, abs(float(rhs)))
            worst = max(worst, res["residual"] / scale)
            rounded = Fraction(round(res["lhs"].real))
            exact &= res["ok"] and rhs == rhs_direct and rounded == rhs and abs(res["lhs"].imag) < 1e-8 * scale
    mert = all(gs.mertens_dft(x)[0] == sum(mobius(n) for n in range(1, x + 1)) for x in range(1, 41))
    phis = all(gs.phi_dft(n)[0] == Fraction(phi(n), n) and gs.phi_dft(n)[1] < 1e-8 for n in range(1, 41))
    avg = all(gs.phi_average_dft(x)[0] == sum(phi(n) for n in range(2, x + 1)) for x in range(1, 41))
    dt = time.perf_counter() - t0
    ok = worst < 1e-8 and exact and mert and phis and avg and dt < 60
    record(6, ok, f"DFT identity k <= 60, 5 (f, g): max rel residual {worst:.2e}, exact after rounding: {exact}; Mertens/phi/average x <= 40: {mert}/{phis}/{avg}; {dt:.2f} s")
    assert ok


def _criterion_7_components() -> dict[str, bool]:
    rng = random.Random(SEED)
    out = {}
    ok = True
    for _ in range(10):
        K0, f = rand_kernel(rng, 40), rand_fn(rng, 40)
        g = lambda n, f=f, K0=K0: gc.k_convolve(f, lambda _: 1, K0, n)  # noqa: E731
        Kred = gc.reduced_inverse_kernel(K0, 40)
        ok &= all(gc.k_mobius_invert(g, K0, n, Kred=Kred) == f(n) for n in range(1, 41))
    out["K-inversion"] = ok
    h = rand_fn(rng, 60)
    out["B pair"] = all(gc.b_inverse_transform(lambda m: gc.b_transform(h, m), n) == h(n) for n in range(1, 61))
    M = 25
    C = lgf.euler_product(M)
    fs = [rand_fn(rng, M + 1) for _ in range(10)]
    ok = True
    for K0 in (lambda n, k: 1, lambda n, k: k, rand_kernel(rng, M)):
        fac = gc.k_factorization(K0, M)
        lhs = [gc.k_lgf(f, K0, M) * fac.product.recip() for f in fs]
        ok &= (fac.S @ fac.S_inv).is_identity()
        ok &= all(lhs[i][n] == sum(fac.S[n, k] * fs[i](k) for k in range(1, n + 1)) for i in range(10) for n in range(1, M + 1))
    for A in (gc.divisor_sets, gc.gcd_divisor_sets):
        v, vi = gc.set_factorization(A, C, M)
        ok &= (v @ vi).is_identity() and all(gc.factorized_sums(v, C, f, M) == [gc.set_sum(A, f, n) for n in range(1, M + 1)] for f in fs)
    D, g = rand_kernel(rng, M), rand_fn(rng, M + 1)
    df = gc.d_factorization(g, C, D, M)
    ok &= (df.S @ df.S_inv).is_identity() and all(gc.factorized_sums(df.S, C, f, M) == [gc.d_convolve(f, g, D, n) for n in range(1, M + 1)] for f in fs)
    out["factorization pairs"] = ok
    return out


def test_criterion_7_components():
    t0 = time.perf_counter()
    parts = _criterion_7_components()
    assert all(parts.values()), parts
    assert time.perf_counter() - t0 < 60


@pytest.mark.xfail(strict=True, reason="the D-inverse closed form only holds for diagonal D; see README")
def test_criterion_7(record):
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    differ = matrix_ok = 0
    for _ in range(10):
        D, g = rand_kernel(rng, 40), rand_fn(rng, 41)
        rec = gc.d_inverse_values(g, D, 40)
        matrix_ok += rec == gc.d_inverse_values(g, D, 40, method="matrix")
        differ += sum(a != b for a, b in zip(rec, gc.d_inverse_values(g, D, 40, method="closed")))
    dt = time.perf_counter() - t0
    record(
        7,
        False,
        f"D-inverse recursion = closed form fails at {differ} of 400 values (10 random pairs, n <= 40); "
        f"recursion = exact matrix inverse for {matrix_ok}/10; the closed form treats the entrywise product "
        f"D o T(g) as the matrix product D T(g). K-inversion, B pair and factorization pairs pass "
        f"(test_criterion_7_components); {dt:.2f} s",
    )
    assert differ == 0


def test_criterion_8(record):
    t0 = time.perf_counter()
    sig = all(
        a == b for s, t in ((1, 1), (2, 1), (1, 2)) for a, b in (lgf.exotic_identities("sigma_st", n, s=s, t=t) for n in range(1, 61))
    )
    jor = all(a == b for t in (1, 2) for a, b in (lgf.exotic_identities("jordan", n, t=t) for n in range(1, 61)))
    lam = max(abs(a - b) for a, b in (lgf.exotic_identities("mangoldt_phi", n) for n in range(1, 61)))
    had = all((lgf.hadamard_hnk(f, 40) @ lgf.hadamard_hnk_inverse(f, 40)).is_identity() for f in (lambda n: 1, lambda n: n, phi))
    dt = time.perf_counter() - t0
    ok = sig and jor and lam < 1e-9 and had and dt < 30
    record(8, ok, f"sigma pairs n <= 60: {sig}; Jordan t = 1, 2: {jor}; Lambda max error {lam:.1e}; Hadamard h h^-1 = I at N = 40: {had}; {dt:.2f} s")
    assert ok


def test_criterion_9(record):
    t0 = time.perf_counter()
    checks = {tid: ss.compare_table(tid) for tid in ss.TABLE_IDS}
    tables_ok = all(c.ok for c in checks.values())
    rng = random.Random(SEED)
    rt = True
    for _ in range(10):
        v = [rng.randint(-9, 9) for _ in range(80)]
        rt &= all(ss.decode(k, ss.transform_values(k, v, 80)) == [Fraction(x) for x in v] for k in ss.KINDS)
    obs = []
    for name, f in ss.FUNCTIONS.items():
        p = ss.conjecture_probe(f, 200)
        clauses = [f"{c}={'holds' if p[c]['holds'] else 'violated'}" for c in ("s1_sign", "s2_sign") if c in p]
        par = p["s2hat_parity"]
        obs.append(f"{name}: {', '.join(clauses)}, s2hat parity {'holds' if par['holds'] else 'fails (last ' + str(par['last_violation']) + ')'}")
    dt = time.perf_counter() - t0
    ok = tables_ok and rt and dt < 20
    worst = max(c.max_residual for c in checks.values())
    record(9, ok, f"10 sign tables regenerate: {tables_ok} (max decimal residual {worst:.1e}); round trip 10 f to n = 80: {rt}; observations to n = 200 follow; {dt:.2f} s")
    for line in obs:
        print("    " + line)
    assert ok


def test_criterion_10(record):
    t0 = time.perf_counter()
    vals = {ab: cs.corr_lgf(*ab, 2000) for ab in ((1, 0), (3, 1), (5, 3))}
    again = cs.corr_lgf(3, 1, 2000)
    reproducible = again.value == vals[(3, 1)].value and again.partials == vals[(3, 1)].partials
    bracket = {ab: abs(vals[ab].value - t) <= 0.05 for ab, t in CORR_TARGETS.items()}
    not_converged = [ab for ab, r in vals.items() if not r.converged and r.notes]
    dt = time.perf_counter() - t0
    ok = (all(bracket.values()) or len(not_converged) == len(vals)) and reproducible and dt < 300
    desc = "; ".join(
        f"({a},{b}) = {r.value:.4f} (last doubling +{r.value - r.partials[-2][1]:.4f}, Aitken {r.extrapolated:.3f})" for (a, b), r in vals.items()
    )
    record(
        10,
        ok,
        f"N = 2000 square truncation: {desc}. Bracket |x - target| <= 0.05 holds for "
        f"{sum(bracket.values())}/2 targets (0.92008, 0.7634): the printed values are NOT reproduced. "
        f"Passes only via the non-convergence clause ({len(not_converged)}/3 traces flagged) and "
        f"bit-for-bit reproducibility ({reproducible}); {dt:.1f} s",
    )
    assert ok


def test_criterion_11(record):
    exe = shutil.which("gfkit")
    cmd = [exe] if exe else [sys.executable, "-m", "gfkit.cli"]
    t0 = time.perf_counter()
    res = subprocess.run(cmd + ["verify", "--suite", "all", "--seed", "7"], capture_output=True, text=True, env=dict(os.environ))
    dt = time.perf_counter() - t0
    meta = json.loads(res.stdout)["meta"] if res.stdout else {}
    ok = res.returncode == 0 and meta.get("failures") == 0 and dt < 600
    record(
        11,
        ok,
        f"gfkit verify --suite all --seed 7 exit {res.returncode}: {meta.get('cases')} cases, {meta.get('failures')} failures, "
        f"{len(meta.get('conflicts', []))} documented conflicts reproduced; {dt:.1f} s",
    )
    for c in meta.get("conflicts", []):
        print(f"    conflict [{c['suite']}] {c['name']}: {c['detail']}")
    assert ok
