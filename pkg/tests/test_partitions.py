from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockforge.partitions import (
    CoreQuotient,
    addable_removable,
    beta_numbers,
    conjugate,
    content_polynomial,
    core_quotient,
    count_multipartitions,
    cores,
    dilate,
    from_beta_numbers,
    is_core,
    multipartitions,
    nodes_with_residue,
    parse_multipartition,
    format_multipartition,
    partitions,
    rebuild_from_core_quotient,
    z_value,
)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert count_multipartitions(3, 2) == len(multipartitions(3, 2)) == 10


@pytest.mark.parametrize("lam,expected", [((2, 1), (2, 1)), ((3, 1), (2, 1, 1)), ((), ())])
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected


def test_dilate_and_z():
    assert dilate(2, (2, 1)) == (4, 2)
    assert dilate(3, ()) == ()
    assert dilate(1, (5, 5)) == (5, 5)
    assert z_value((1, 1)) == 2
    assert z_value((2, 1)) == 2
    assert z_value((3, 3, 1)) == 18


def test_residue_counts():
    assert nodes_with_residue(((1,),), (0,), 2) == [1, 0]
    assert nodes_with_residue(((2, 1),), (0,), 2) == [1, 2]
    assert nodes_with_residue(((), ()), (3, -1), 4) == [0, 0, 0, 0]


def test_addable_removable():
    add, rem = addable_removable(((),), (0,), 2, 0)
    assert add == [(1, 1, 1)] and rem == []
    _, rem = addable_removable(((2, 1),), (0,), 2, 1)
    assert sorted(rem) == [(1, 1, 2), (1, 2, 1)]
    add, _ = addable_removable(((1,), ()), (0, 1), 2, 1)
    assert (1, 1, 2) in add and (2, 1, 1) in add


def test_contents():
    assert content_polynomial((2, 1)) == Counter({0: 1, 1: 1, -1: 1})
    assert content_polynomial(()) == Counter()
    assert content_polynomial((3,)) == Counter({0: 1, 1: 1, 2: 1})


def _brute_core(lam, ell):
    """Strip ℓ-rims by repeatedly removing a bead one runner step up, until stuck."""
    beads = beta_numbers(lam, len(lam) + ell)
    moved = True
    while moved:
        moved = False
        for k, b in enumerate(beads):
            if b >= ell and b - ell not in beads:
                beads[k] = b - ell
                moved = True
    return from_beta_numbers(sorted(beads, reverse=True))


def test_core_quotient_examples():
    assert core_quotient((3, 1), 1) == CoreQuotient((), ((3, 1),))
    assert core_quotient((), 3) == CoreQuotient((), ((), (), ()))
    cq = core_quotient((2,), 2)
    assert cq.core == () and sum(map(sum, cq.quotient)) == 1


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_core_matches_rim_stripping(ell):
    for n in range(10):
        for lam in partitions(n):
            cq = core_quotient(lam, ell)
            assert cq.core == _brute_core(lam, ell)
            assert is_core(cq.core, ell)
            assert n == sum(cq.core) + ell * sum(map(sum, cq.quotient))


@pytest.mark.parametrize("ell", [2, 3])
def test_round_trip(ell):
    for n in range(9):
        for lam in partitions(n):
            assert rebuild_from_core_quotient(core_quotient(lam, ell), ell) == lam


def test_cores_are_cores():
    assert all(is_core(c, 3) for c in cores(10, 3))
    assert (1,) in cores(3, 2) and (2, 1) in cores(3, 2) and (2,) not in cores(3, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(1, 4), max_size=3), min_size=1, max_size=3))
def test_text_round_trip(raw):
    mp = tuple(tuple(sorted(c, reverse=True)) for c in raw)
    assert parse_multipartition(format_multipartition(mp)) == mp


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_multipartition("[1,2]")
    with pytest.raises(ValueError):
        parse_multipartition("[a]")
