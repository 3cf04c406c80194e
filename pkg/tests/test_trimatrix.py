from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import lower_inverse
from hypothesis import given
from hypothesis import strategies as st

from gfkit.trimatrix import Poly, PolyMatrix, TriMatrix, chain_inverse_entry


@st.composite
def lower(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    rows = []
    for i in range(n):
        off = draw(st.lists(st.integers(-6, 6), min_size=i, max_size=i))
        diag = draw(st.sampled_from([-3, -2, -1, 1, 2, 5]))
        rows.append(off + [diag])
    return rows


def test_rejects_upper_entries():
    with pytest.raises(ValueError):
        TriMatrix([[1, 2], [3, 4]])


def test_identity_and_indexing():
    I = TriMatrix.identity(4)
    assert I.is_identity()
    assert I[3, 3] == 1 and I[3, 1] == 0


@given(lower())
def test_inverse_matches_gauss_jordan(rows):
    M = TriMatrix(rows)
    assert M.inverse().rows() == lower_inverse(rows)
    assert (M @ M.inverse()).is_identity()


@given(lower(6))
def test_chain_sum_inverse(rows):
    M = TriMatrix(rows)
    inv = M.inverse()
    a = lambda n, k: M[n, k]  # noqa: E731
    n = M.size
    assert all(chain_inverse_entry(a, i, k) == inv[i, k] for i in range(1, n + 1) for k in range(1, i + 1))


@given(lower(6), lower(6))
def test_product_is_associative_with_apply(r1, r2):
    n = min(len(r1), len(r2))
    A, B = TriMatrix(r1).leading(n), TriMatrix(r2).leading(n)
    v = list(range(1, n + 1))
    assert (A @ B).apply(v) == A.apply(B.apply(v))


def test_poly_arithmetic():
    p = Poly([1, 2])  # 1 + 2w
    q = Poly([0, 1, 1])  # w + w^2
    assert (p * q)(3) == 7 * 12
    assert (p + q).degree == 2
    assert p(Fraction(1, 2)) == 2


def test_poly_matrix_evaluate():
    M = PolyMatrix([[Poly([1])], [Poly([0, 1]), Poly([2])]])
    E = M.evaluate(5)
    assert E.rows() == [[1], [5, 2]]
