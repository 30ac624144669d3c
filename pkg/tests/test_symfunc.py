from collections import Counter
from fractions import Fraction
from itertools import product as cartesian

import pytest

from fockforge.partitions import partitions, z_value
from fockforge.symfunc import (
    SymFunc,
    WreathFunc,
    hall_pairing,
    induce_from_sym,
    mult_by_power_sum,
    plethysm_psi,
    power_to_schur,
    product,
    restrict_to_sym,
    rotate_tau,
    schur_to_power,
    wreath_mult_by_P,
    wreath_pairing,
)

# polynomial oracle: monomials in k variables as exponent tuples


def _ssyt(shape, k):
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    out = []

    def fill(idx, tab):
        if idx == len(cells):
            out.append(dict(tab))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, tab[(i, j - 1)])
        if i > 0:
            lo = max(lo, tab[(i - 1, j)] + 1)
        for v in range(lo, k + 1):
            tab[(i, j)] = v
            fill(idx + 1, tab)
        tab.pop((i, j), None)

    fill(0, {})
    return out


def schur_poly(shape, k):
    poly = Counter()
    for tab in _ssyt(shape, k):
        exp = [0] * k
        for v in tab.values():
            exp[v - 1] += 1
        poly[tuple(exp)] += 1
    return poly


def power_poly(r, k):
    return Counter({tuple(r if i == x else 0 for i in range(k)): 1 for x in range(k)})


def mul(a, b):
    out = Counter()
    for x, c in a.items():
        for y, d in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += c * d
    return out


def as_poly(f: SymFunc, k):
    out = Counter()
    for lam, c in f.to_schur().coeffs.items():
        for mono, v in schur_poly(lam, k).items():
            out[mono] += c * v
    return {m: c for m, c in out.items() if c}


def test_pieri_examples():
    assert mult_by_power_sum(1, SymFunc.schur((1,), 2)) == SymFunc({(2,): 1, (1, 1): 1}, "schur", 2)
    assert mult_by_power_sum(2, SymFunc.one(2)) == SymFunc({(2,): 1, (1, 1): -1}, "schur", 2)
    assert mult_by_power_sum(1, SymFunc.one(1)) == SymFunc.schur((1,), 1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_border_strip_rule_against_polynomials(r):
    k = 5
    for n in range(0, 6 - r):
        for lam in partitions(n):
            got = as_poly(mult_by_power_sum(r, SymFunc.schur(lam, n + r)), k)
            want = {m: c for m, c in mul(power_poly(r, k), schur_poly(lam, k)).items() if c}
            assert got == want


def test_change_of_basis_examples():
    assert schur_to_power((1,)).coeffs == {(1,): 1}
    assert schur_to_power((2,)).coeffs == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    assert power_to_schur((2,)).coeffs == {(2,): 1, (1, 1): -1}


def test_hall_pairing():
    assert hall_pairing(SymFunc.schur((2,)), SymFunc.schur((2,))) == 1
    assert hall_pairing(SymFunc.power((2,)), SymFunc.power((2,))) == 2
    assert hall_pairing(SymFunc.schur((2,)), SymFunc.schur((1, 1))) == 0
    for lam in partitions(5):
        for mu in partitions(5):
            want = z_value(lam) if lam == mu else 0
            assert hall_pairing(SymFunc.power(lam), SymFunc.power(mu)) == want


def test_plethysm():
    assert plethysm_psi(3, SymFunc.power((2,), 6)) == SymFunc.power((6,), 6)
    assert plethysm_psi(2, SymFunc.schur((1,), 2)) == SymFunc({(2,): 1, (1, 1): -1}, "schur", 2)
    assert plethysm_psi(4, SymFunc.one(4)) == SymFunc.one(4)


def test_plethysm_is_variable_substitution():
    k = 4
    f = SymFunc.schur((2, 1), 6)
    got = as_poly(plethysm_psi(2, f), k)
    want = {tuple(2 * e for e in m): c for m, c in as_poly(SymFunc.schur((2, 1), 3), k).items()}
    assert got == want


def test_product_matches_polynomials():
    k = 4
    f, g = SymFunc.schur((2,), 4), SymFunc.schur((1, 1), 4)
    assert as_poly(product(f, g), k) == {m: c for m, c in mul(schur_poly((2,), k), schur_poly((1, 1), k)).items()}


def test_wreath_pairing_and_P():
    assert wreath_pairing(WreathFunc.schur(((1,), (2,))), WreathFunc.schur(((1,), (2,)))) == 1
    assert wreath_pairing(WreathFunc.schur(((1,), ())), WreathFunc.schur(((), (1,)))) == 0
    p20 = wreath_mult_by_P(2, 0, WreathFunc.one(2, 2))
    assert wreath_pairing(p20, p20) == 2
    assert wreath_mult_by_P(1, 0, WreathFunc.one(2, 1)).coeffs == {((1,), ()): 1}
    assert wreath_mult_by_P(2, 1, WreathFunc.one(2, 2)).coeffs == {((), (2,)): 1, ((), (1, 1)): -1}
    assert wreath_mult_by_P(3, 1, WreathFunc({}, 2, 3)).coeffs == {}


def test_restriction_and_induction():
    assert restrict_to_sym(WreathFunc.schur(((1,), ()))) == SymFunc.schur((1,))
    assert restrict_to_sym(WreathFunc.schur(((1,), (1,)))) == SymFunc({(2,): 1, (1, 1): 1}, "schur", 2)
    for p in range(3):
        P = wreath_mult_by_P(2, p, WreathFunc.one(3, 2))
        assert restrict_to_sym(P) == SymFunc.power((2,), 2)
    ind = induce_from_sym(SymFunc.power((1,), 1), 3)
    assert ind.coeffs == {((1,), (), ()): 1, ((), (1,), ()): 1, ((), (), (1,)): 1}
    assert induce_from_sym(SymFunc.one(0), 2) == WreathFunc.one(2)
    single = induce_from_sym(SymFunc.power((3,), 3), 1).coeffs
    assert single == {(k,): c for k, c in SymFunc.power((3,), 3).to_schur().coeffs.items()}


def test_induced_power_sums_are_orthogonal():
    ell = 2
    for lam in partitions(4):
        for mu in partitions(4):
            a = induce_from_sym(SymFunc.power(lam, 4), ell)
            b = induce_from_sym(SymFunc.power(mu, 4), ell)
            want = z_value(lam) * ell ** len(lam) if lam == mu else 0
            assert wreath_pairing(a, b) == want


def test_rotation():
    assert rotate_tau(((1,), ())) == ((), (1,))
    assert rotate_tau(((2, 1),)) == ((2, 1),)
    mp = ((1,), (2,), (1, 1))
    assert rotate_tau(rotate_tau(rotate_tau(mp))) == mp
