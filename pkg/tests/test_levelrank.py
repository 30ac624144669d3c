from fractions import Fraction
from itertools import product

import pytest

from fockforge import grading, levelrank
from fockforge.fock import AffineWeight, FockSpaceParams
from fockforge.partitions import cores, partitions

w = AffineWeight.fundamental
delta = AffineWeight.null_root


def test_translation_basics():
    beta = levelrank.lattice_element([1, 1], 3)
    mu = w(0, 3) + w(2, 3)
    assert levelrank.xi_action(AffineWeight.zero(3), mu) == mu
    assert levelrank.xi_action(beta, w(0, 3)) == w(0, 3) + beta - Fraction(1, 2) * beta.pairing(beta) * delta(3)
    with pytest.raises(ValueError):
        levelrank.xi_action(w(1, 3) - w(0, 3), mu)


def test_translation_is_isometric():
    weights = [w(a, 3) + w(b, 3) + c * delta(3) for a in range(3) for b in range(3) for c in (0, 1)]
    for beta in levelrank.lattice_window(3, -2, 2):
        for mu in weights:
            for nu in weights[::5]:
                assert levelrank.xi_action(beta, mu).pairing(levelrank.xi_action(beta, nu)) == mu.pairing(nu)


def test_gamma():
    assert levelrank.gamma_of_charge((0, 0)) == AffineWeight.zero(2)
    g = levelrank.gamma_of_charge((1, -1))
    assert g == -2 * (w(1, 2) - w(0, 2)) and g.pairing(g) == 2
    g3 = levelrank.gamma_of_charge((1, 0, -1))
    assert g3.pairing(g3) == 2
    with pytest.raises(ValueError):
        levelrank.gamma_of_charge((1, 0))


def test_gamma_hat():
    assert levelrank.gamma_hat((0, 0, 0), 4) == 4 * w(0, 3)
    assert levelrank.gamma_hat((1, 0, 0, -1), 3) == w(0, 4) + w(1, 4) + w(3, 4)
    for lam in levelrank.bounded_tuples(3, 2, 0, -2, 2):
        assert levelrank.gamma_hat(lam, 2).level == 2


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_gamma_hat_is_lifted_translate(ell):
    for s in product(range(-3, 4), repeat=ell):
        if sum(s):
            continue
        gam = levelrank.gamma_of_charge(s)
        assert gam.pairing(gam) == sum(x * x for x in s)
        for m in (2, 3, 4):
            lifted = levelrank.prime_lift(levelrank.xi_action(-gam, w(0, ell)), m)
            assert levelrank.gamma_hat(s, m) == lifted


def test_dagger_examples():
    assert levelrank.dagger((0, 0, 0), 2) == (0, 0)
    for ell in range(1, 5):
        for m in range(1, 5):
            src = levelrank.bounded_tuples(ell, m, 0, -m, m)
            img = [levelrank.dagger(lam, m) for lam in src]
            assert sorted(img) == sorted(levelrank.bounded_tuples(m, ell, 0, -ell, ell))
            assert all(levelrank.dagger(mu, ell) == lam for lam, mu in zip(src, img))
    with pytest.raises(ValueError):
        levelrank.dagger((3, 0, -3), 2)


def test_dominant_lifts():
    for ell in range(1, 5):
        for m in range(1, 5):
            assert levelrank.dominant_lifts(ell, m) == levelrank.gamma_hat_image(ell, m)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_cores_and_charges(ell):
    assert levelrank.tau_core_to_charge((), ell) == (0,) * ell
    for core in cores(10, ell):
        s = levelrank.tau_core_to_charge(core, ell)
        assert sum(s) == 0
        assert levelrank.charge_to_core(s) == core
        assert levelrank.zero_nodes(core, ell) == levelrank.half_square_norm(s)


def test_extremal_weights():
    for beta in levelrank.lattice_window(3, -2, 2):
        for i in range(3):
            mu = levelrank.translate_vacuum(beta, i)
            assert mu.pairing(mu) == -2 * i


@pytest.mark.parametrize("m,ell", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_trivial_charge_count(m, ell):
    p = FockSpaceParams(m, ell, (0,) * ell, 5)
    for n in range(6):
        total = sum(levelrank.rhs_case1_dim(n, j, m, ell) for j in range(n * ell + 1))
        assert total == levelrank.case1_basis_size(n, ell)
        for j in range(n + 1):
            assert levelrank.rhs_case1_dim(n, j, m, ell) == grading.graded_dims(n, p).column_sum(j)
    assert levelrank.rhs_case1_dim(0, 0, m, ell) == 1 and levelrank.rhs_case1_dim(0, 1, m, ell) == 0
