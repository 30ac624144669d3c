"""Symmetric functions over Q truncated at a degree bound, and the wreath
extension Λ_Γ = Λ^{⊗ℓ}.

Schur functions are the internal basis.  Power sums enter and leave through the
character table, which is itself generated by the Murnaghan-Nakayama rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import (
    EMPTY,
    Multipartition,
    Partition,
    beta_numbers,
    from_beta_numbers,
    multisize,
    partitions,
    z_value,
)

SCHUR = "schur"
POWER = "power"


class DegreeOverflow(ValueError):
    pass


def _clean(coeffs: Mapping) -> dict:
    return {k: Fraction(v) for k, v in coeffs.items() if v}


# -- Murnaghan-Nakayama --------------------------------------------------------


@lru_cache(maxsize=None)
def add_border_strips(lam: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """All (mu, sign) with mu/lam a border strip of size r, sign (-1)^height."""
    length = len(lam) + r
    beads = beta_numbers(lam, length)
    occupied = set(beads)
    out = []
    for idx, b in enumerate(beads):
        if b + r in occupied:
            continue
        passed = sum(1 for c in beads if b < c < b + r)
        new = beads[:idx] + [b + r] + beads[idx + 1 :]
        out.append((from_beta_numbers(new), -1 if passed % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def remove_border_strips(lam: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """All (mu, sign) with lam/mu a border strip of size r; transpose of the above."""
    beads = beta_numbers(lam, len(lam))
    occupied = set(beads)
    out = []
    for idx, b in enumerate(beads):
        if b - r < 0 or b - r in occupied:
            continue
        passed = sum(1 for c in beads if b - r < c < b)
        new = beads[:idx] + [b - r] + beads[idx + 1 :]
        out.append((from_beta_numbers(new), -1 if passed % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _power_in_schur(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """Schur expansion of p_lam, i.e. the character values chi^mu(lam)."""
    current: dict[Partition, int] = {EMPTY: 1}
    for r in lam:
        nxt: dict[Partition, int] = {}
        for mu, c in current.items():
            for nu, sign in add_border_strips(mu, r):
                nxt[nu] = nxt.get(nu, 0) + sign * c
        current = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(current.items()))


@lru_cache(maxsize=None)
def _schur_in_power(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    # s_lam = sum_mu chi^lam(mu) / z_mu p_mu
    out = []
    for mu in partitions(sum(lam)):
        chi = dict(_power_in_schur(mu)).get(lam, 0)
        if chi:
            out.append((mu, Fraction(chi, z_value(mu))))
    return tuple(out)


# -- Λ ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SymFunc:
    """Finitely supported rational combination of s_lam (or p_lam)."""

    coeffs: dict = field(default_factory=dict)
    basis: str = SCHUR
    bound: int = 0

    def __post_init__(self):
        if self.basis not in (SCHUR, POWER):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coeffs", _clean(self.coeffs))
        for lam in self.coeffs:
            if sum(lam) > self.bound:
                raise DegreeOverflow(f"{lam} exceeds degree bound {self.bound}")

    @classmethod
    def schur(cls, lam: Partition, bound: int | None = None) -> "SymFunc":
        return cls({tuple(lam): 1}, SCHUR, sum(lam) if bound is None else bound)

    @classmethod
    def power(cls, lam: Partition, bound: int | None = None) -> "SymFunc":
        return cls({tuple(lam): 1}, POWER, sum(lam) if bound is None else bound)

    @classmethod
    def one(cls, bound: int = 0, basis: str = SCHUR) -> "SymFunc":
        return cls({EMPTY: 1}, basis, bound)

    def _like(self, coeffs, basis=None) -> "SymFunc":
        return SymFunc(coeffs, basis or self.basis, self.bound)

    def to_schur(self) -> "SymFunc":
        if self.basis == SCHUR:
            return self
        out: dict = {}
        for lam, c in self.coeffs.items():
            for mu, chi in _power_in_schur(lam):
                out[mu] = out.get(mu, 0) + c * chi
        return self._like(out, SCHUR)

    def to_power(self) -> "SymFunc":
        if self.basis == POWER:
            return self
        out: dict = {}
        for lam, c in self.coeffs.items():
            for mu, w in _schur_in_power(lam):
                out[mu] = out.get(mu, 0) + c * w
        return self._like(out, POWER)

    def in_basis(self, basis: str) -> "SymFunc":
        return self.to_schur() if basis == SCHUR else self.to_power()

    def with_bound(self, bound: int) -> "SymFunc":
        return SymFunc(self.coeffs, self.basis, bound)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = other.in_basis(self.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(out, self.basis, max(self.bound, other.bound))

    def __neg__(self) -> "SymFunc":
        return self._like({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __rmul__(self, scalar) -> "SymFunc":
        return self._like({k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.to_schur().coeffs == other.to_schur().coeffs

    def __repr__(self) -> str:
        sym = "s" if self.basis == SCHUR else "p"
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{sym}{list(k)}" for k, c in sorted(self.coeffs.items()))

    def degree(self) -> int:
        return max((sum(k) for k in self.coeffs), default=0)


def power_to_schur(lam: Partition, bound: int | None = None) -> SymFunc:
    return SymFunc(dict(_power_in_schur(tuple(lam))), SCHUR, sum(lam) if bound is None else bound)


def schur_to_power(lam: Partition, bound: int | None = None) -> SymFunc:
    return SymFunc(dict(_schur_in_power(tuple(lam))), POWER, sum(lam) if bound is None else bound)


def mult_by_power_sum(r: int, f: SymFunc) -> SymFunc:
    """p_r * f in the Schur basis; terms above the degree bound are dropped."""
    if r < 1:
        raise ValueError("r must be positive")
    f = f.to_schur()
    out: dict = {}
    for lam, c in f.coeffs.items():
        if sum(lam) + r > f.bound:
            continue
        for mu, sign in add_border_strips(lam, r):
            out[mu] = out.get(mu, 0) + sign * c
    return SymFunc(out, SCHUR, f.bound)


def product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the truncated algebra (degrees above the bound are dropped)."""
    bound = max(f.bound, g.bound)
    fp, gp = f.to_power(), g.to_power()
    out: dict = {}
    for lam, a in fp.coeffs.items():
        for mu, b in gp.coeffs.items():
            if sum(lam) + sum(mu) > bound:
                continue
            key = tuple(sorted(lam + mu, reverse=True))
            out[key] = out.get(key, 0) + a * b
    return SymFunc(out, POWER, bound).in_basis(f.basis)


def hall_pairing(f: SymFunc, g: SymFunc) -> Fraction:
    fs, gs = f.to_schur().coeffs, g.to_schur().coeffs
    return sum((c * gs[k] for k, c in fs.items() if k in gs), Fraction(0))


def plethysm_psi(m: int, f: SymFunc) -> SymFunc:
    """ψ^m(f) = Σ_λ z_λ^{-1} <f, p_λ> p_{mλ}, re-expanded in the basis of f."""
    if m < 1:
        raise ValueError("m must be positive")
    out: dict = {}
    for lam in {k for k in f.to_power().coeffs}:
        weight = hall_pairing(f, SymFunc.power(lam, f.bound)) / z_value(lam)
        if not weight:
            continue
        if m * sum(lam) > f.bound:
            raise DegreeOverflow(f"psi^{m} of degree {sum(lam)} exceeds bound {f.bound}")
        key = tuple(m * x for x in lam)
        out[key] = out.get(key, 0) + weight
    return SymFunc(out, POWER, f.bound).in_basis(f.basis)


plethysm_psi_m = plethysm_psi


# -- Λ_Γ --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WreathFunc:
    """Rational combination of S_λ, λ an ℓ-partition indexed by Z_ℓ."""

    coeffs: dict = field(default_factory=dict)
    ell: int = 1
    bound: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))
        for lam in self.coeffs:
            if len(lam) != self.ell:
                raise ValueError(f"{lam} does not have {self.ell} components")
            if multisize(lam) > self.bound:
                raise DegreeOverflow(f"{lam} exceeds degree bound {self.bound}")

    @classmethod
    def schur(cls, lam: Multipartition, bound: int | None = None) -> "WreathFunc":
        lam = tuple(tuple(c) for c in lam)
        return cls({lam: 1}, len(lam), multisize(lam) if bound is None else bound)

    @classmethod
    def one(cls, ell: int, bound: int = 0) -> "WreathFunc":
        return cls({(EMPTY,) * ell: 1}, ell, bound)

    def _like(self, coeffs) -> "WreathFunc":
        return WreathFunc(coeffs, self.ell, self.bound)

    def __add__(self, other: "WreathFunc") -> "WreathFunc":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return WreathFunc(out, self.ell, max(self.bound, other.bound))

    def __neg__(self) -> "WreathFunc":
        return self._like({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "WreathFunc") -> "WreathFunc":
        return self + (-other)

    def __rmul__(self, scalar) -> "WreathFunc":
        return self._like({k: scalar * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WreathFunc):
            return NotImplemented
        return self.ell == other.ell and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*S{[list(p) for p in k]}" for k, c in sorted(self.coeffs.items()))


def rotate_tau(lam: Multipartition) -> Multipartition:
    """(τλ)(p) = λ(p+1) on Z_ℓ-indexed components."""
    return tuple(lam[1:]) + tuple(lam[:1])


def wreath_mult_by_P(r: int, p: int, f: WreathFunc) -> WreathFunc:
    """Multiply by P_{r,p}: Murnaghan-Nakayama on component p only."""
    if r < 1:
        raise ValueError("r must be positive")
    p %= f.ell
    out: dict = {}
    for lam, c in f.coeffs.items():
        if multisize(lam) + r > f.bound:
            continue
        for mu, sign in add_border_strips(lam[p], r):
            key = lam[:p] + (mu,) + lam[p + 1 :]
            out[key] = out.get(key, 0) + sign * c
    return f._like(out)


def wreath_power_monomial(factors: Iterable[tuple[int, int]], ell: int, bound: int) -> WreathFunc:
    """Π P_{r,p} over the given (r, p) pairs, expanded in the S basis."""
    f = WreathFunc.one(ell, bound)
    for r, p in factors:
        f = wreath_mult_by_P(r, p, f)
    return f


def wreath_pairing(f: WreathFunc, g: WreathFunc) -> Fraction:
    if f.ell != g.ell:
        raise ValueError("pairing between different ℓ")
    return sum((c * g.coeffs[k] for k, c in f.coeffs.items() if k in g.coeffs), Fraction(0))


def restrict_to_sym(f: WreathFunc, bound: int | None = None) -> SymFunc:
    """Algebra map S_λ ↦ Π_p s_{λ(p)} (so P_{r,p} ↦ p_r)."""
    bound = f.bound if bound is None else bound
    out = SymFunc({}, SCHUR, bound)
    for lam, c in f.coeffs.items():
        if multisize(lam) > bound:
            raise DegreeOverflow(f"{lam} exceeds degree bound {bound}")
        term = SymFunc.one(bound)
        for comp in lam:
            term = product(term, SymFunc.schur(comp, bound))
        out = out + c * term
    return out


def induce_from_sym(f: SymFunc, ell: int, bound: int | None = None) -> WreathFunc:
    """Algebra map p_r ↦ Σ_p P_{r,p}."""
    bound = f.bound if bound is None else bound
    out = WreathFunc({}, ell, bound)
    for lam, c in f.to_power().coeffs.items():
        term = WreathFunc.one(ell, bound)
        for r in lam:
            acc = WreathFunc({}, ell, bound)
            for p in range(ell):
                acc = acc + wreath_mult_by_P(r, p, term)
            term = acc
        out = out + c * term
    return out
