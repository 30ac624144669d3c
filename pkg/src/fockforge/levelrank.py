"""Affine weight combinatorics around level-rank duality.

Weights are ``AffineWeight`` values (coordinates on ω_0..ω_{k-1} and δ).  Finite
root lattice elements are written β = Σ_{p≥1} b_p (ω_p - ω_0), so they have
level 0 and no δ part.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg
from .errors import InvariantError
from .fock import AffineWeight, _level1_columns
from .partitions import (
    Charge,
    Partition,
    core_charge,
    core_from_charge,
    core_quotient,
    nodes_with_residue,
    partitions,
)


def weight_pairing(mu: AffineWeight, nu: AffineWeight) -> Fraction:
    return mu.pairing(nu)


def lattice_element(b, rank: int) -> AffineWeight:
    """Σ_{p=1}^{rank-1} b_p (ω_p - ω_0) from the list (b_1, ..., b_{rank-1})."""
    b = list(b)
    if len(b) != rank - 1:
        raise ValueError(f"expected {rank - 1} coordinates, got {len(b)}")
    return AffineWeight((-sum(b), *b))


def in_root_lattice(beta: AffineWeight) -> bool:
    if beta.delta != 0 or beta.level != 0:
        return False
    if any(Fraction(x).denominator != 1 for x in beta.omega):
        return False
    return sum(p * int(x) for p, x in enumerate(beta.omega)) % beta.rank == 0


def xi_action(beta: AffineWeight, mu: AffineWeight) -> AffineWeight:
    """μ + μ(1)β - (⟨μ,β⟩ + ½⟨β,β⟩ μ(1)) δ, where μ(1) is the level of μ."""
    if not in_root_lattice(beta):
        raise ValueError("translation must lie in the finite root lattice")
    level = mu.level
    shift = mu.pairing(beta) + Fraction(1, 2) * beta.pairing(beta) * level
    return mu + level * beta - shift * AffineWeight.null_root(mu.rank)


def gamma_of_charge(s: Charge) -> AffineWeight:
    """Σ_{p=1}^{ℓ-1} (s_{p+1} - s_p)(ω_p - ω_0) for a charge of weight 0."""
    if sum(s) != 0:
        raise ValueError(f"charge {tuple(s)} does not have weight 0")
    ell = len(s)
    return lattice_element([s[p] - s[p - 1] for p in range(1, ell)], ell)


def gamma_hat(lam, m: int) -> AffineWeight:
    """(m - λ_1 + λ_ℓ) ω_0 + Σ_{p=1}^{ℓ-1} (λ_p - λ_{p+1}) ω_p."""
    lam = tuple(lam)
    ell = len(lam)
    if ell == 0:
        raise ValueError("empty tuple")
    coords = [m - lam[0] + lam[-1]] + [lam[p - 1] - lam[p] for p in range(1, ell)]
    return AffineWeight(tuple(coords))


def prime_lift(mu: AffineWeight, m: int) -> AffineWeight:
    """m ω_0 + Σ_{p≥1} μ_p (ω_p - ω_0), forgetting δ."""
    tail = mu.omega[1:]
    return AffineWeight((m - sum(tail), *tail))


def fundamental_sum(residues, rank: int) -> AffineWeight:
    coords = [0] * rank
    for r in residues:
        coords[r % rank] += 1
    return AffineWeight(tuple(coords))


# -- bounded tuples and the dagger bijection -----------------------------------


def is_bounded_tuple(lam, m: int) -> bool:
    lam = tuple(lam)
    return (
        len(lam) > 0
        and all(lam[k] >= lam[k + 1] for k in range(len(lam) - 1))
        and lam[0] - lam[-1] <= m
    )


def bounded_tuples(ell: int, m: int, d: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Members of A(ℓ,m)_d with all entries in [lo, hi], in lexicographic order."""
    out = []

    def rec(prefix: list, remaining: int, cap: int) -> None:
        k = len(prefix)
        if k == ell:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        floor = lo if not prefix else max(lo, prefix[0] - m)
        left = ell - k - 1
        for x in range(floor, cap + 1):
            rest = remaining - x
            # the remaining entries lie in [floor, x]
            if floor * left <= rest <= x * left:
                prefix.append(x)
                rec(prefix, rest, x)
                prefix.pop()

    rec([], d, hi)
    return out


def window(ell: int, m: int) -> tuple[int, int]:
    return -m - ell, m + ell


@lru_cache(maxsize=None)
def _dagger_table(ell: int, m: int, d: int) -> dict:
    lo, hi = window(ell, m)
    table: dict = {}
    for mu in bounded_tuples(m, ell, d, lo, hi):
        table.setdefault(fundamental_sum(mu, ell), []).append(mu)
    return table


def dagger(lam, m: int) -> tuple[int, ...]:
    """The unique μ in A(m,ℓ)_d with γ̂(λ,m) = Σ_p ω_{μ_p mod ℓ}."""
    lam = tuple(lam)
    if not is_bounded_tuple(lam, m):
        raise ValueError(f"{lam} is not in A({len(lam)},{m})")
    found = _dagger_table(len(lam), m, sum(lam)).get(gamma_hat(lam, m), [])
    if len(found) != 1:
        raise InvariantError(f"dagger of {lam} has {len(found)} candidates")
    return found[0]


# -- cores and charges ------------------------------------------------------------


def tau_core_to_charge(core: Partition, ell: int) -> Charge:
    return core_charge(core, ell)


def charge_to_core(s: Charge) -> Partition:
    return core_from_charge(tuple(s))


def zero_nodes(lam: Partition, ell: int) -> int:
    return nodes_with_residue((lam,), (0,), ell)[0]


def half_square_norm(s: Charge) -> Fraction:
    return Fraction(sum(x * x for x in s), 2)


# -- weight-set checks ------------------------------------------------------------


def translate_vacuum(beta: AffineWeight, i: int = 0) -> AffineWeight:
    """ω_0 + β - ½⟨β,β⟩δ - iδ."""
    rank = beta.rank
    shift = Fraction(1, 2) * beta.pairing(beta) + i
    return AffineWeight.fundamental(0, rank) + beta - shift * AffineWeight.null_root(rank)


def lattice_window(ell: int, lo: int, hi: int):
    for b in product(range(lo, hi + 1), repeat=ell - 1):
        beta = lattice_element(b, ell)
        if in_root_lattice(beta):
            yield beta


def is_dominant(mu: AffineWeight) -> bool:
    return all(x >= 0 for x in mu.omega)


def dominant_lifts(ell: int, m: int, depth: int = 2) -> set:
    """{ν' : ν a weight of the basic representation with ν' dominant} on a window."""
    out = set()
    for beta in lattice_window(ell, -1, m + 1):
        for i in range(depth + 1):
            lifted = prime_lift(translate_vacuum(beta, i), m)
            if is_dominant(lifted):
                out.add(lifted)
    return out


def gamma_hat_image(ell: int, m: int) -> set:
    return {gamma_hat(lam, m) for lam in bounded_tuples(ell, m, 0, -m, m)}


# -- trivial-charge Casimir count ----------------------------------------------


@lru_cache(maxsize=None)
def _empty_core_partitions(size: int, ell: int) -> tuple:
    return tuple(lam for lam in partitions(size) if not core_quotient(lam, ell).core)


def rhs_case1_dim(n: int, j: int, m: int, ell: int) -> int:
    """dim of the eigenvalue-j space of the m-th Casimir on partitions of nℓ with empty ℓ-core."""
    if n < 0 or j < 0:
        return 0
    basis = _empty_core_partitions(n * ell, ell)
    index = {lam: k for k, lam in enumerate(basis)}
    cols = _level1_columns(n * ell, m, ell)
    images = []
    for k, lam in enumerate(basis):
        col = {}
        for mu, c in cols[lam].items():
            if mu not in index:
                raise InvariantError(f"∂_m leaves the empty-core span at {lam}")
            col[index[mu]] = c
        linalg.axpy(col, -j, {k: 1})
        images.append(col)
    return len(linalg.kernel(images))


def case1_basis_size(n: int, ell: int) -> int:
    return len(_empty_core_partitions(n * ell, ell))
