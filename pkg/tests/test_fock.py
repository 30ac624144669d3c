from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockforge import spectral
from fockforge.fock import (
    AffineWeight,
    FockSpaceParams,
    FockVector,
    apply_b,
    apply_b_dual,
    apply_casimir,
    apply_e,
    apply_f,
    casimir_m_matrix_level1,
    casimir_matrix,
    fock_pairing,
    format_vector,
    parse_vector,
    weight_of,
)
from fockforge.partitions import multipartitions, nodes_with_residue, partitions


def vec(params, text):
    return parse_vector(text, params)


P1 = FockSpaceParams(2, 1, (0,), 6)
P2 = FockSpaceParams(2, 2, (0, 0), 6)


def test_chevalley_generators():
    assert apply_e(0, vec(P1, "[1]")) == FockVector.vacuum(P1)
    assert not apply_e(1, vec(P1, "[1]"))
    assert apply_e(1, vec(P1, "[2,1]")) == vec(P1, "[2] + [1,1]")
    assert apply_f(0, FockVector.vacuum(P2)) == vec(P2, "[1]|[] + []|[1]")


def test_heisenberg_examples():
    assert apply_b(1, FockVector.vacuum(P1)) == vec(P1, "[2] - [1,1]")
    assert apply_b(1, FockVector.vacuum(P2)) == vec(P2, "[2]|[] - [1,1]|[] + []|[2] - []|[1,1]")
    assert not apply_b(2, FockVector(P1))
    assert apply_b_dual(1, vec(P1, "[2]")) == FockVector.vacuum(P1)
    assert apply_b_dual(1, vec(P1, "[1,1]")) == -FockVector.vacuum(P1)
    assert not apply_b_dual(2, vec(P1, "[2,1]"))


def test_b_raises_the_right_component():
    # a charge shift must not change which component b_r touches
    p = FockSpaceParams(2, 2, (1, -1), 4)
    img = apply_b(1, vec(p, "[1]|[]"))
    assert all(k[1] == () or k[0] == (1,) for k in img.coeffs)


def test_pairing():
    a, b = vec(P2, "[1]|[]"), vec(P2, "[]|[1]")
    assert fock_pairing(a, a) == 1 and fock_pairing(a, b) == 0
    assert fock_pairing(Fraction(3) * a - b, a + Fraction(1, 2) * b) == Fraction(5, 2)


mp_strategy = st.sampled_from([mp for n in range(5) for mp in multipartitions(n, 2)])


@settings(max_examples=80, deadline=None)
@given(mp_strategy, mp_strategy, st.integers(1, 2))
def test_b_dual_is_adjoint(x, y, r):
    p = FockSpaceParams(2, 2, (0, 1), 8)
    X, Y = FockVector.basis(p, x), FockVector.basis(p, y)
    assert fock_pairing(apply_b_dual(r, X), Y) == fock_pairing(X, apply_b(r, Y))


@settings(max_examples=60, deadline=None)
@given(mp_strategy, mp_strategy, st.integers(0, 1))
def test_e_is_adjoint_of_f(x, y, q):
    p = FockSpaceParams(2, 2, (0, 1), 8)
    X, Y = FockVector.basis(p, x), FockVector.basis(p, y)
    assert fock_pairing(apply_e(q, X), Y) == fock_pairing(X, apply_f(q, Y))


def test_vector_text_round_trip():
    v = vec(P2, "1/2 [2]|[] - 3 []|[1,1] + [1]|[1]")
    assert vec(P2, format_vector(v.coeffs)) == v
    assert format_vector({}) == "0"
    assert vec(P1, "[2] − [1,1]") == vec(P1, "[2] - [1,1]")
    with pytest.raises(ValueError):
        vec(P2, "[1]")


def test_weights():
    assert weight_of(((), ()), P2) == AffineWeight((2, 0))
    assert weight_of(((1,),), P1) == AffineWeight.fundamental(0, 2) - AffineWeight.simple_root(0, 2)
    # δ coefficient is -n_0 when the charge is trivial
    for lam in partitions(6):
        assert weight_of((lam,), P1).delta == -nodes_with_residue((lam,), (0,), 2)[0]


def test_casimir_small_cases():
    assert casimir_matrix(1, P1) == [[0]]
    assert casimir_matrix(2, P1) == [[Fraction(1, 2), Fraction(-1, 2)], [Fraction(-1, 2), Fraction(1, 2)]]
    assert apply_casimir(vec(P1, "[2]")) == vec(P1, "1/2 [2] - 1/2 [1,1]")
    assert apply_casimir(vec(P1, "[2] - [1,1]")) == vec(P1, "[2] - [1,1]")


@pytest.mark.parametrize("m", [2, 3])
def test_level_one_casimir_matches_fock_casimir(m):
    for n in range(7):
        assert casimir_m_matrix_level1(n, m, 1) == casimir_matrix(n, FockSpaceParams(m, 1, (0,), 6))
    assert all(x == 0 for row in casimir_m_matrix_level1(5, 3, 2) for x in row)


def test_casimir_trace_identity():
    p = FockSpaceParams(2, 2, (0, 0), 6)
    n = 6
    basis = multipartitions(n, 2)
    trace = sum(casimir_matrix(n, p)[k][k] for k in range(len(basis)))
    norms = Fraction(0)
    for r in range(1, n // 2 + 1):
        for mp in multipartitions(n - 2 * r, 2):
            img = apply_b(r, FockVector.basis(p, mp))
            norms += sum(c * c for c in img.coeffs.values())
    assert trace == norms / (p.m * p.ell)


@pytest.mark.parametrize("m,ell", [(2, 1), (2, 2), (3, 2)])
def test_spectrum(m, ell):
    for n in range(7):
        dims = spectral.eigenspace_dims(n, m, ell)
        assert sum(dims.values()) == len(multipartitions(n, ell))
        assert set(dims) <= set(range(n // m + 1))
        assert spectral.kernel_matches_vacuum(n, m, ell)


def test_affine_weights():
    assert AffineWeight.fundamental(1, 2).pairing(AffineWeight.fundamental(1, 2)) == Fraction(1, 2)
    assert all(AffineWeight.fundamental(0, 4).pairing(AffineWeight.fundamental(q, 4)) == 0 for q in range(4))
    d = AffineWeight.null_root(3)
    assert d.pairing(d) == 0
    # simple roots pair through the Cartan matrix
    for q in range(3):
        a = AffineWeight.simple_root(q, 3)
        assert a.pairing(a) == 2
        assert a.pairing(AffineWeight.simple_root(q + 1, 3)) == -1


def test_params_validation():
    with pytest.raises(ValueError):
        FockSpaceParams(1, 1, (0,), 3)
    with pytest.raises(ValueError):
        FockSpaceParams(2, 2, (0,), 3)
    with pytest.raises(ValueError):
        FockVector(P1, {((1, 1, 1, 1, 1, 1, 1),): 1})
