from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import pytest
from conftest import divisors, lower_inverse, mobius, phi
from hypothesis import given
from hypothesis import strategies as st

from gfkit import arithfn as af
from gfkit import gcdsums as gs
from gfkit.errors import SingularW
from gfkit.trimatrix import Poly

MU_ROW_4 = [1, -1, -1, 1]
MU_13_1 = 3
T_5_3 = -2
T_INV_ROW_5 = [4, 3, 2, 1, 1]
C6_4 = -1
C2_1 = -1


def rand_fn(seed: int, N: int) -> af.ExactFn:
    rng = random.Random(seed)
    v = [rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(N - 1)]
    return af.from_values(v)


def exp_ramanujan(q: int, n: int) -> complex:
    return sum(cmath.exp(2j * math.pi * k * n / q) for k in range(1, q + 1) if math.gcd(k, q) == 1)


def test_type_sums_examples():
    assert gs.type1_sum(lambda d: 1, 6) == 2
    f, g = rand_fn(1, 12), rand_fn(2, 12)
    assert gs.type2_sum(f, g, 1, 9) == f(1) * g(9)
    # Id and mu give the Ramanujan sum c_x(k).
    for x in range(1, 16):
        for k in range(1, 16):
            assert abs(float(gs.type2_sum(lambda d: d, mobius, k, x)) - exp_ramanujan(x, k)) < 1e-9


def test_mu_triangle_values():
    tri = gs.mu_triangle(17)
    assert tri.rows()[3] == MU_ROW_4
    assert tri[13, 1] == MU_13_1
    assert all(tri[n, n] == 1 for n in range(1, 18))


def test_mu_triangle_inverts_coprime_indicator():
    ind = [[int(math.gcd(n + 1, k) == 1) for k in range(1, n + 1)] for n in range(1, 18)]
    assert gs.mu_triangle(17).rows() == [[int(x) for x in r] for r in lower_inverse(ind)]


def test_t_matrix_values():
    assert gs.t_entry(5, 3) == T_5_3
    assert gs.t_inverse(5).as_ints()[4] == T_INV_ROW_5
    assert all(gs.t_entry(n, n) == 1 for n in range(1, 30))
    assert (gs.t_matrix(30) @ gs.t_inverse(30)).is_identity()


def test_printed_t_theorem_form_disagrees():
    bad = [(n, k) for n in range(1, 20) for k in range(1, n + 1) if gs.t_entry_printed(n, k, "theorem") != gs.t_entry(n, k)]
    assert bad and bad[0] == (3, 3)


@pytest.mark.parametrize("name,f", [("one", lambda n: 1), ("id", lambda n: n), ("mu", mobius)])
def test_type1_factorization(name, f):
    res = gs.type1_factorize(f, 60)
    assert res["ok"]
    assert res["direct"] == [sum(Fraction(f(d)) for d in range(1, x + 1) if math.gcd(d, x) == 1) for x in range(1, 61)]


def test_type1_reconstruct_phi():
    T = [phi(x) for x in range(1, 32)]
    assert gs.type1_reconstruct(T, 30) == [1] * 30


def test_mertens_type1():
    for x in range(1, 31):
        assert abs(gs.mertens_type1(x) - af.mertens(x)) < 1e-8


def test_menon_direct():
    for n in range(1, 40):
        direct = sum(math.gcd(k - 1, n) for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert direct == phi(n) * len(divisors(n))
        assert gs.menon_toth("menon", n)
    assert gs.menon_sides(6)["lhs"] == 8


def test_toth():
    assert gs.menon_toth("toth", 12, lambda n: 1)
    assert gs.menon_toth("toth", 1, rand_fn(3, 1))
    f = rand_fn(4, 60)
    assert all(gs.menon_toth("toth", n, f) for n in range(1, 61))


def test_u_inverse_entry():
    assert gs.u_inverse_entry(lambda n: n, 2, 1) == Poly([0, 1, 3])
    assert gs.u_inverse_entry(lambda n: 0, 5, 2) == Poly()


@pytest.mark.parametrize("w", [Fraction(2), Fraction(1, 2), Fraction(-3, 5)])
def test_u_times_inverse(w):
    f = lambda n: n  # noqa: E731
    N = 12
    assert (gs.u_matrix(f, w, N) @ gs.u_inverse(f, N).evaluate(w)).is_identity()
    u = gs.u_matrix(f, w, N)
    assert all(u[n, n] == (1 - w) / (w * (1 - w**n) * f(1)) for n in range(1, N + 1))


def test_u_matrix_rejects_roots_of_unity():
    with pytest.raises(SingularW):
        gs.u_matrix(lambda n: 1, 1, 4)
    with pytest.raises(SingularW):
        gs.u_matrix(lambda n: 1, -1, 4)


def test_df_table_row_4():
    f, w = rand_fn(5, 8), Fraction(2, 3)
    tab = gs.DfTable(f, w)
    fh = tab.fh
    assert tab.D(4) == (fh(2) ** 2 - fh(1) * fh(4)) / fh(1) ** 3


def test_u_hat_row_2_col_1():
    f, w = rand_fn(6, 8), Fraction(-3, 2)
    fh = lambda n: gs.fhat(f, w, n)  # noqa: E731
    assert gs.u_hat_matrix(f, w, 4)[2, 1] == -fh(2) / fh(1) ** 2 - 1 / fh(1)


def test_u_hat_closed_form():
    f = rand_fn(7, 12)
    for w in (Fraction(2, 3), Fraction(5)):
        assert gs.u_hat_closed(f, w, 12) == gs.u_hat_matrix(f, w, 12)


def test_lhat_forms():
    f, g = rand_fn(8, 20), rand_fn(9, 20)
    assert all(gs.lhat(f, g, n) == gs.lhat_direct(f, g, n) for n in range(1, 21))


def test_ramanujan_examples():
    assert all(gs.ramanujan_c(1, n) == 1 for n in range(1, 20))
    assert gs.ramanujan_c(2, 1) == C2_1
    assert gs.ramanujan_c(6, 4) == C6_4


@given(st.integers(1, 40), st.integers(1, 40))
def test_ramanujan_forms(q, n):
    c = gs.ramanujan_c(q, n)
    assert abs(exp_ramanujan(q, n) - c) < 1e-8
    assert gs.ramanujan_c(q, n, "partition") == c
    if n <= q:
        assert gs.ramanujan_c(q, n, "wcoeff") == c


def test_dft_gcd_epsilon_at_zero():
    eps = lambda n: int(n == 1)  # noqa: E731
    for n in range(1, 30):
        assert gs.dft_gcd(eps, 0, n, "convolution") == phi(n)
        assert abs(gs.dft_gcd(eps, 0, n) - phi(n)) < 1e-9


@given(st.integers(1, 25), st.integers(0, 25))
def test_dft_gcd_routes(n, a):
    h = rand_fn(10, 25)
    assert abs(gs.dft_gcd(h, a, n) - float(gs.dft_gcd(h, a, n, "convolution"))) < 1e-8


def test_fourier_coefficient_k1():
    f, g = rand_fn(11, 3), rand_fn(12, 3)
    assert gs.fourier_coeffs(f, g, 1) == [f(1) * g(1)]


def test_dft_main_identity_examples():
    res = gs.dft_main_identity(lambda n: n, mobius, 2)
    assert res["rhs"] == -2 and res["ok"]
    f, g = rand_fn(13, 1), rand_fn(14, 1)
    assert gs.dft_main_identity(f, g, 1)["rhs"] == f(1) * g(1)


def test_mertens_and_phi_dft():
    assert gs.mertens_dft(10)[0] == -1
    assert all(gs.phi_dft(n)[0] == Fraction(phi(n), n) for n in range(1, 25))


def test_recover_g():
    f, g = rand_fn(15, 30), rand_fn(16, 30)
    L = lambda r, d: gs.type2_sum(f, g, r, d)  # noqa: E731
    for n in range(1, 21):
        val, res = gs.recover_g(f, L, n)
        assert val == g(n) and res < 1e-9


def test_interchange_identities():
    f, g, h = rand_fn(17, 30), rand_fn(18, 30), rand_fn(19, 30)
    for n in (1, 7, 12, 30):
        a, b = gs.interchange_divisor(f, g, h, n)
        assert a == b
        a, b = gs.interchange_gcd(f, g, h, n)
        assert a == b
