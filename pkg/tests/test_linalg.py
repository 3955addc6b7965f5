from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from z2rep import linalg


def F(x):
    return Fraction(x)


def test_rref_identity_like():
    rows = [[F(2), F(0)], [F(0), F(3)]]
    rr, pivots = linalg.rref(rows)
    assert rr == [[F(1), F(0)], [F(0), F(1)]]
    assert pivots == [0, 1]


def test_rank_and_nullspace_consistency():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert linalg.rank(rows) == 2
    kernel = linalg.nullspace(rows, 3)
    assert len(kernel) == 1
    for vec in kernel:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_nullspace_of_zero_map_is_identity_basis():
    kernel = linalg.nullspace([], 3)
    assert kernel == [[F(1), F(0), F(0)], [F(0), F(1), F(0)], [F(0), F(0), F(1)]]


def test_solve_unique():
    a = [[F(2), F(1)], [F(1), F(3)]]
    x = linalg.solve_unique(a, [F(5), F(10)])
    assert x == [F(1), F(3)]
    with pytest.raises(ValueError):
        linalg.solve_unique([[F(1), F(1)]], [F(1)])  # underdetermined
    with pytest.raises(ValueError):
        linalg.solve_unique([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)])


def test_det_matches_cofactor_expansion():
    a = [[F(1), F(2), F(3)], [F(4), F(5), F(6)], [F(7), F(8), F(10)]]
    # brute-force 3x3 cofactor expansion as independent oracle
    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    assert linalg.det(a) == det3(a)


def test_char_poly_of_diagonal():
    a = [[F(2), F(0)], [F(0), F(-3)]]
    # (x-2)(x+3) = x^2 + x - 6
    assert linalg.char_poly(a) == [F(-6), F(1), F(1)]


def test_rational_roots():
    # (t-1)(t+2/3) scaled: 3t^2 - t - 2
    assert linalg.rational_roots([F(-2), F(-1), F(3)]) == [Fraction(-2, 3), F(1)]
    assert linalg.rational_roots([F(0), F(0), F(1)]) == [F(0)]
    # t^2 - 2 has no rational root
    assert linalg.rational_roots([F(-2), F(0), F(1)]) == []


small = st.integers(min_value=-6, max_value=6)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=2, max_size=5))
def test_nullspace_vectors_annihilate(rows_int):
    rows = [[F(x) for x in row] for row in rows_int]
    kernel = linalg.nullspace(rows, 4)
    assert len(kernel) == 4 - linalg.rank(rows)
    for vec in kernel:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_char_poly_roots_are_eigenvalues(rows_int):
    a = [[F(x) for x in row] for row in rows_int]
    coeffs = linalg.char_poly(a)
    for t in linalg.rational_roots(coeffs):
        shifted = [[a[i][j] - (t if i == j else 0) for j in range(3)]
                   for i in range(3)]
        assert linalg.rank(shifted) < 3
