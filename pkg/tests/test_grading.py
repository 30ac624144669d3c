from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockforge import grading
from fockforge.fock import FockSpaceParams, apply_b_dual, apply_casimir, apply_e
from fockforge.partitions import count_multipartitions

P1 = FockSpaceParams(2, 1, (0,), 8)


def test_worked_level_one_case():
    hw2 = grading.highest_weight_space(2, P1)
    assert hw2.dim == 1 and hw2.basis[0].coeffs in ({((2,),): 1, ((1, 1),): -1}, {((2,),): -1, ((1, 1),): 1})
    assert grading.highest_weight_space(0, P1).dim == 1
    assert grading.highest_weight_space(1, P1).dim == 0
    assert grading.singular_space(0, P1).dim == 1
    assert grading.singular_space(2, P1).dim == 0
    assert grading.casimir_eigenspace(2, 1, P1).dim == 1
    assert grading.casimir_eigenspace(2, 5, P1).dim == 0
    assert grading.depth_space(1, 1, P1).dim == 1
    assert grading.graded_dims(0, P1).entries == {(0, 0): 1}
    assert grading.graded_dims(2, P1).entries == {(0, 1): 1, (2, 0): 1}
    assert grading.findim_counts(FockSpaceParams(2, 1, (0,), 2)) == [1, 0, 0]


def test_subspace_vectors_are_what_they_claim():
    p = FockSpaceParams(2, 2, (1, -1), 5)
    for v in grading.highest_weight_space(4, p).basis:
        assert all(not apply_e(q, v) for q in range(2))
    for v in grading.singular_space(4, p).basis:
        assert not apply_b_dual(1, v) and not apply_b_dual(2, v)
    for j in range(3):
        for v in grading.casimir_eigenspace(4, j, p).basis:
            assert apply_casimir(v) == Fraction(j) * v


CASES = [
    (2, 1, (0,)),
    (3, 1, (0,)),
    (2, 2, (0, 0)),
    (2, 2, (1, -1)),
    (3, 2, (0, 0)),
    (3, 2, (2, -2)),
]


@pytest.mark.parametrize("m,ell,charge", CASES)
def test_table_consistency(m, ell, charge):
    p = FockSpaceParams(m, ell, charge, 7)
    for n in range(8):
        t = grading.graded_dims(n, p)
        assert t.total() == count_multipartitions(n, ell)
        for i in range(n + 1):
            assert t.row_sum(i) == grading.depth_space(n, i, p).dim
        for j in range(n // m + 1):
            assert t.column_sum(j) == grading.casimir_eigenspace(n, j, p).dim
        assert all(i + m * j <= n for i, j in t.entries)


@pytest.mark.parametrize("m,ell,charge", CASES + [(2, 3, (0, 0, 0)), (2, 3, (1, 0, -1))])
def test_fast_table_matches_intersection(m, ell, charge):
    p = FockSpaceParams(m, ell, charge, 6 if ell < 3 else 5)
    for n in range(p.bound + 1):
        assert grading.graded_dims(n, p).entries == grading.graded_dims_by_intersection(n, p).entries


@pytest.mark.parametrize("m,ell,charge", CASES)
def test_deconvolution(m, ell, charge):
    p = FockSpaceParams(m, ell, charge, 8)
    h = grading.findim_counts(p)
    assert h[0] == 1
    assert h == [grading.singular_dim(n, p) for n in range(9)]
    for n in range(9):
        for j in range(n // m + 2):
            assert grading.hw_eigen_count_check(n, j, p)


def test_known_counts():
    assert grading.findim_counts(FockSpaceParams(2, 2, (0, 0), 8)) == [1, 1, 1, 2, 3, 4, 5, 7, 10]
    assert grading.findim_counts(FockSpaceParams(3, 2, (0, 0), 8)) == [1, 1, 0, 1, 3, 0, 3, 6, 0]


def test_series_helpers():
    assert grading.heisenberg_series(2, 6) == [1, 0, 1, 0, 2, 0, 3]
    num = [1, 2, 3, 4, 5]
    den = [1, 1, 0, 1, 0]
    assert grading.series_multiply(grading.series_divide(num, den), den, 4) == num
    with pytest.raises(ZeroDivisionError):
        grading.series_divide([1], [0, 1])


pairs = st.tuples(st.integers(0, 8), st.integers(0, 4))


@settings(max_examples=200)
@given(pairs, pairs, pairs, st.integers(2, 4))
def test_filtration_order_is_a_partial_order(a, b, c, m):
    assert grading.precedes(a, a, m)
    if grading.precedes(a, b, m) and grading.precedes(b, c, m):
        assert grading.precedes(a, c, m)
    if grading.precedes(a, b, m) and grading.precedes(b, a, m):
        assert a == b


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3), st.integers(1, 2), st.integers(-2, 2), st.integers(0, 6))
def test_filtration_dims_are_monotone(m, ell, shift, n):
    charge = (shift, -shift) if ell == 2 else (0,)
    p = FockSpaceParams(m, ell, charge, 6)
    dims = grading.filtration_dims(grading.graded_dims(n, p), m)
    for a in dims:
        for b in dims:
            if grading.precedes(a, b, m):
                assert dims[a] <= dims[b]


def test_output_helpers():
    t = grading.graded_dims(2, P1)
    assert t.to_json() == {"n": 2, "dims": [[0, 1, 1], [2, 0, 1]]}
    assert grading.table_csv([t]) == "n,i,j,dim\n2,0,1,1\n2,2,0,1\n"


def test_degree_outside_bound():
    with pytest.raises(ValueError):
        grading.graded_dims(9, P1)
    with pytest.raises(ValueError):
        grading.casimir_eigenspace(2, -1, P1)
