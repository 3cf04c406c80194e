from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from conftest import dirichlet, divisors, mobius, partitions
from hypothesis import given
from hypothesis import strategies as st

from gfkit import genconv as gc
from gfkit import lgf
from gfkit.errors import NotInvertible, SingularFactorization, SingularKernel, SingularToeplitz
from gfkit.pseries import Series

ONE = lambda n, k: 1  # noqa: E731


def rand_fn(rng: random.Random, N: int):
    v = [rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(N - 1)]
    return lambda n: v[n - 1] if n <= N else 0


def rand_kernel(rng: random.Random, N: int, lo: int = 1):
    tab = {(n, k): rng.randint(lo, 9) for n in range(1, N + 1) for k in range(1, n + 1)}
    return lambda n, k: tab.get((n, k), 0)


def test_k_convolution_reduces_to_dirichlet():
    rng = random.Random(1)
    f, g = rand_fn(rng, 30), rand_fn(rng, 30)
    assert all(gc.k_convolve(f, g, ONE, n) == dirichlet(f, g, n) for n in range(1, 31))
    assert all(gc.k_mobius_invert(lambda n: dirichlet(f, lambda _: 1, n), ONE, n) == f(n) for n in range(1, 31))


def test_k_convolution_at_one():
    K0 = lambda n, k: 7  # noqa: E731
    assert gc.k_convolve(lambda n: 3, lambda n: 5, K0, 1) == 3 * 5 * 7


def test_singular_kernel():
    with pytest.raises(SingularKernel):
        gc.reduced_inverse_kernel(lambda n, k: 0 if n == k == 3 else 1, 4)


@given(st.integers(0, 10**6))
def test_k_inversion_round_trip(seed):
    rng = random.Random(seed)
    N = 24
    K0, f = rand_kernel(rng, N), rand_fn(rng, N)
    g = lambda n: gc.k_convolve(f, lambda _: 1, K0, n)  # noqa: E731
    Kred = gc.reduced_inverse_kernel(K0, N)
    assert all(gc.k_mobius_invert(g, K0, n, Kred=Kred) == f(n) for n in range(1, N + 1))
    assert all(gc.k_mobius_invert(g, K0, n, method="substitution") == f(n) for n in range(1, N + 1))


def test_literal_full_triangle_inverse_fails_for_one():
    f = lambda n: n  # noqa: E731
    g = lambda n: dirichlet(f, lambda _: 1, n)  # noqa: E731
    assert gc.k_mobius_invert_literal(g, ONE, 12) != [f(n) for n in range(1, 13)]


def test_b_pair():
    rng = random.Random(2)
    h = rand_fn(rng, 60)
    assert all(gc.b_inverse_transform(lambda m: gc.b_transform(h, m), n) == h(n) for n in range(1, 61))
    assert gc.b_kernel(12, 2) == math.comb(2, 1) * math.comb(1, 0)


def test_b_pair_printed_weight_differs_at_primes():
    h = lambda n: n * n  # noqa: E731
    g = lambda m: gc.b_transform(h, m)  # noqa: E731
    assert gc.b_inverse_transform(g, 5, literal=True) != h(5)


@pytest.mark.parametrize("name", ["one", "k", "random"])
def test_k_factorization(name):
    rng = random.Random(3)
    N = 18
    K0 = {"one": ONE, "k": lambda n, k: k, "random": rand_kernel(rng, N)}[name]
    fac = gc.k_factorization(K0, N)
    assert (fac.S @ fac.S_inv).is_identity()
    f = rand_fn(rng, N)
    L = gc.k_lgf(f, K0, N)
    assert all(L[n] == gc.k_convolve(f, lambda _: 1, K0, n) for n in range(1, N + 1))
    lhs = L * fac.product.recip()
    assert all(lhs[n] == sum(fac.S[n, k] * f(k) for k in range(1, n + 1)) for n in range(1, N + 1))


def test_k_factorization_reduces_to_snk():
    N = 15
    fac = gc.k_factorization(ONE, N)
    assert fac.product == lgf.euler_product(N).recip()
    assert fac.S == lgf.snk(lgf.euler_product(N), N)


def test_toeplitz():
    assert gc.toeplitz_apply([1], [3, 4, 5]) == [3, 4, 5]
    assert gc.toeplitz_apply([1, 2], [1, 1, 1]) == [1, 3, 3]
    T = gc.Toeplitz([2, -1, 3, 0, 5])
    assert (T.matrix(8) @ T.inverse(8).matrix(8)).is_identity()
    with pytest.raises(SingularToeplitz):
        gc.Toeplitz([0, 1]).inverse(3)


def test_toeplitz_kcvl_epsilon():
    assert all(gc.toeplitz_kcvl(ONE, mobius, lambda n: 1, n) == (n == 1) for n in range(1, 31))


@given(st.integers(0, 10**6))
def test_toeplitz_kcvl_matches_k_convolution(seed):
    rng = random.Random(seed)
    K0, f, g = rand_kernel(rng, 20, lo=-9), rand_fn(rng, 20), rand_fn(rng, 20)
    assert all(gc.toeplitz_kcvl(K0, f, g, n) == gc.k_convolve(f, g, K0, n) for n in range(1, 21))


def test_shift_inverse_is_inverse_of_ones():
    ones = gc.Toeplitz([1] * 10).matrix(10)
    assert (ones @ gc.shift_inverse(10)).is_identity()


def test_ogf_functional_cases():
    N = 12
    rng = random.Random(4)
    f = [0] + [rng.randint(-5, 5) for _ in range(N)]
    H1 = Series([1] + [rng.randint(-3, 3) for _ in range(N)], N)
    H2 = Series([0] + [rng.randint(-3, 3) for _ in range(N)], N)
    for case in "AB":
        assert gc.ogf_functional(case, (H1, H2), f, N) == gc.ogf_direct(case, (H1, H2), f, N)
    # H2 = q, H1 = 1: the column sums are a plain shift.
    q = Series.monomial(1, N)
    assert gc.ogf_functional("A", (Series.one(N), q), f, N) == Series(f, N)


def test_ogf_case_b_exponential():
    N = 10
    f = [1] * (N + 1)  # EGF of e^z
    q = Series.monomial(1, N)
    out = gc.ogf_functional("B", (Series.one(N), q), f, N)
    assert out == Series([0] + [Fraction(1, math.factorial(k)) for k in range(1, N + 1)], N)


def test_binomial_transform_of_ones():
    a, b = gc.binomial_transform([1] * 21, 20)
    assert a == b == [int(x == 0) for x in range(21)]


def test_coprime_columns():
    for k in range(1, 15):
        d, m = gc.coprime_column_series(k, 40)
        assert d == m


def test_set_factorizations():
    N = 15
    C = lgf.euler_product(N)
    rng = random.Random(5)
    f = rand_fn(rng, N)
    for A in (gc.divisor_sets, gc.gcd_divisor_sets):
        v, vi = gc.set_factorization(A, C, N)
        assert (v @ vi).is_identity()
        assert gc.factorized_sums(v, C, f, N) == [gc.set_sum(A, f, n) for n in range(1, N + 1)]
    with pytest.raises(SingularFactorization):
        gc.set_factorization(gc.coprime_sets, C, N)
    # Forward identity still holds for the coprime sets.
    v = gc.set_matrix(gc.coprime_sets, C, N)
    assert gc.factorized_sums(v, C, f, N) == [gc.set_sum(gc.coprime_sets, f, n) for n in range(1, N + 1)]


def test_gcd_divisor_sets_are_divisor_sets():
    assert all(gc.gcd_divisor_sets(d, n) == (n % d == 0) for n in range(1, 40) for d in range(1, n + 1))


def test_d_inverse_routes():
    rng = random.Random(6)
    N = 20
    D, g = rand_kernel(rng, N), rand_fn(rng, N + 1)
    rec = gc.d_inverse_values(g, D, N)
    assert rec == gc.d_inverse_values(g, D, N, method="matrix")
    assert all(gc.d_convolve(lambda k: rec[k - 1], g, D, n) == (n == 1) for n in range(1, N + 1))


def test_d_inverse_needs_g1():
    with pytest.raises(NotInvertible):
        gc.d_inverse_values(lambda n: 0, ONE, 3)


def test_d_inverse_closed_form_scope():
    rng = random.Random(7)
    g = rand_fn(rng, 13)
    I = lambda n, k: int(n == k)  # noqa: E731
    assert gc.d_inverse_values(g, I, 10, method="closed") == gc.d_inverse_values(g, I, 10)
    assert gc.d_inverse_values(g, ONE, 10, method="closed") != gc.d_inverse_values(g, ONE, 10)


def test_d_inverse_symbolic_rows_symmetric():
    rng = random.Random(8)
    base = rand_kernel(rng, 5)
    Ds = lambda n, k: base(n, min(k, n + 1 - k))  # noqa: E731
    g = rand_fn(rng, 5)
    rec = gc.d_inverse_values(g, Ds, 4)
    assert all(gc.d_inverse_table(g, Ds, n) == rec[n - 1] for n in range(1, 5))


def test_d_factorization():
    rng = random.Random(9)
    N = 15
    C = Series([1, -1, 2, 0, 3] + [0] * 11, N)
    D, g, f = rand_kernel(rng, N), rand_fn(rng, N + 1), rand_fn(rng, N)
    df = gc.d_factorization(g, C, D, N)
    assert (df.S @ df.S_inv).is_identity()
    assert gc.factorized_sums(df.S, C, f, N) == [gc.d_convolve(f, g, D, n) for n in range(1, N + 1)]
    assert gc.d_inverse_matrix_closed(g, C, ONE, N) == gc.d_factorization(g, C, ONE, N).S_inv


def test_kernel_from_spec(tmp_path):
    p = tmp_path / "k.csv"
    p.write_text("n,k,value\n1,1,1\n2,1,3\n2,2,1/2\n")
    K = gc.kernel_from_spec(f"csv:{p}")
    assert K(2, 1) == 3 and K(2, 2) == Fraction(1, 2) and K(3, 1) == 0
    assert gc.kernel_from_spec("binom")(5, 3) == 6
    with pytest.raises(KeyError):
        gc.kernel_from_spec("nope")


def test_divisor_kernel_generates_partition_product():
    # prod (1 + H_j) for the all-ones divisor kernel is the partition generating function.
    P = gc.k_product(ONE, 20)
    assert [int(P[n]) for n in range(21)] == [partitions(n) for n in range(21)]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_d_inverse_first_rows():
    rng = random.Random(10)
    D, g = rand_kernel(rng, 4), rand_fn(rng, 4)
    F = lambda x: Fraction(x)  # noqa: E731
    assert gc.d_inverse(g, D, 1) == 1 / (F(D(1, 1)) * g(1))
    # Row 2 by direct solve of the 2x2 system.
    assert gc.d_inverse(g, D, 2) == -F(D(2, 1)) * g(2) / (F(D(1, 1)) * D(2, 2) * g(1) ** 2)


def test_d_inverse_all_ones_is_cauchy_inverse():
    rng = random.Random(11)
    g = rand_fn(rng, 16)
    G = Series([g(m + 1) for m in range(15)], 14).recip()
    assert gc.d_inverse_values(g, ONE, 15) == [G[n - 1] for n in range(1, 16)]
