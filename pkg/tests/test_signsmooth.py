from __future__ import annotations

import random
from fractions import Fraction

import pytest
from conftest import distinct_partitions, inverse_by_solving, partitions
from hypothesis import given
from hypothesis import strategies as st

from gfkit import arithfn as af
from gfkit import signsmooth as ss
from gfkit.errors import NotInvertible, PreconditionFailed

PHI_ROW_16 = (-1, -159, 39)
D_ROW_1 = (1, 1, -1)
LAMBDA_S2HAT_16 = 564
SIGMA_S2_9_16 = [16, 39, 58, 31, 56, 109, 75, 66]
MU_INV_S1_1_5 = [1, 2, 3, 5, 7]

vals = st.lists(st.integers(-9, 9), min_size=40, max_size=40)


def oracle_s1(f, n: int) -> Fraction:
    return sum((Fraction(f(j)) * distinct_partitions(n - j) for j in range(1, n + 1)), Fraction(0))


def oracle_s2hat(f, n: int) -> Fraction:
    return (-1) ** n * sum((Fraction(f(j)) * partitions(n - j) for j in range(1, n + 1)), Fraction(0))


def test_transforms_against_enumeration():
    rng = random.Random(1)
    v = [rng.randint(-9, 9) for _ in range(25)]
    f = lambda n: v[n - 1]  # noqa: E731
    assert ss.transform_values("s1", f, 25) == [oracle_s1(f, n) for n in range(1, 26)]
    assert ss.transform_values("s2hat", f, 25) == [oracle_s2hat(f, n) for n in range(1, 26)]


def test_transform_examples():
    phi_inv = af.dirichlet_inverse_fn(af.euler_phi)
    assert ss.transform("s1", phi_inv, 5) == -7
    assert ss.transform("s1hat", phi_inv, 3) == -2
    assert ss.transform("s1", lambda n: 13, 1) == 13
    with pytest.raises(PreconditionFailed):
        ss.transform("s1", phi_inv, 0)
    with pytest.raises(ValueError):
        ss.transform_values("s3", phi_inv, 4)


def test_epsilon_gives_kernel():
    eps = lambda n: int(n == 1)  # noqa: E731
    assert ss.transform_values("s1", eps, 10) == [distinct_partitions(n) for n in range(10)]


def test_sigma_s2_profile():
    p = ss.sign_profile("s2", lambda n: af.sigma(1, n), 16)
    assert [int(x) for x in p.values[8:16]] == SIGMA_S2_9_16
    assert all(s == 1 for s in p.signs[8:16])


def test_mu_s1_profile():
    p = ss.sign_profile("s1", af.mobius, 40)
    assert [int(x) for x in p.values[:5]] == MU_INV_S1_1_5
    assert p.last_change is None and p.tail_sign == 1


def test_sign_profile_errors():
    with pytest.raises(NotInvertible):
        ss.sign_profile("s1", lambda n: 0, 20)
    with pytest.raises(PreconditionFailed):
        ss.sign_profile("s1", af.mobius, 8)


def test_table_rows():
    assert tuple(int(x) for x in ss.table_dump("smooth-1")[15][1:4]) == PHI_ROW_16
    assert tuple(int(x) for x in ss.table_dump("smooth-2")[0][1:4]) == D_ROW_1
    assert int(ss.table_dump("nonsmooth-5", 32)[15][6]) == LAMBDA_S2HAT_16


@pytest.mark.parametrize("table_id", ss.TABLE_IDS)
def test_tables_regenerate(table_id):
    chk = ss.compare_table(table_id)
    assert chk.ok, chk.mismatches[:3]
    assert chk.cells > 0


def test_first_table_column_is_the_inverse():
    rows = ss.table_dump("smooth-1")
    inv = inverse_by_solving(af.euler_phi, len(rows))
    assert [r[1] for r in rows] == inv


@given(vals)
def test_round_trip(v):
    for kind in ss.KINDS:
        assert ss.decode(kind, ss.transform_values(kind, v, 40)) == [Fraction(x) for x in v]


@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=20, max_size=20))
def test_round_trip_float(v):
    for kind in ss.KINDS:
        back = ss.decode(kind, ss.transform_values(kind, v, 20, exact=False), exact=False)
        assert back == pytest.approx(v, abs=1e-6)


def test_probe_structure():
    probe = ss.conjecture_probe(af.euler_phi, 120)
    assert probe["horizon"] == 120 and not probe["oscillating"]
    assert {"s1_sign", "s2_sign", "s2hat_parity"} <= set(probe)
    assert ss.conjecture_probe(af.mobius, 60)["oscillating"]


def test_s2hat_parity_for_phi():
    assert ss.conjecture_probe(af.euler_phi, 200)["s2hat_parity"]["holds"]
