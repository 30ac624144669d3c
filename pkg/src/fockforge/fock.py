"""The charged level-ℓ Fock space F^(s)_{m,ℓ} on the multipartition basis.

Basis vectors |λ,s⟩ are keyed by ℓ-partitions whose k-th component (0-based)
pairs with the charge entry s_{k+1}.  The Heisenberg generators are transported
to Λ_Γ through |λ,s⟩ ↦ S_{τλ}, where b_r multiplies by Σ_p P_{mr,p}; b'_r is the
transpose of that matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .partitions import (
    Charge,
    Multipartition,
    add_node,
    addable_removable,
    format_multipartition,
    multipartitions,
    multisize,
    nodes_with_residue,
    parse_multipartition,
    partitions,
    remove_node,
)
from .symfunc import WreathFunc, add_border_strips, rotate_tau, wreath_mult_by_P


@dataclass(frozen=True)
class FockSpaceParams:
    m: int
    ell: int
    charge: Charge
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "charge", tuple(int(x) for x in self.charge))
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if self.ell < 1:
            raise ValueError("ell must be positive")
        if len(self.charge) != self.ell:
            raise ValueError(f"charge {self.charge} does not have {self.ell} entries")
        if self.bound < 0:
            raise ValueError("degree bound must be nonnegative")

    @property
    def level(self) -> int:
        """Level of the Heisenberg action."""
        return self.m * self.ell


@lru_cache(maxsize=None)
def _order_index(n: int, ell: int) -> dict:
    return {mp: k for k, mp in enumerate(multipartitions(n, ell))}


def basis_sort_key(mp: Multipartition):
    n = multisize(mp)
    return n, _order_index(n, len(mp))[mp]


@dataclass(frozen=True, eq=False)
class FockVector:
    params: FockSpaceParams
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: Fraction(v) for k, v in self.coeffs.items() if v}
        for k in clean:
            if len(k) != self.params.ell:
                raise ValueError(f"{k} does not have {self.params.ell} components")
            if multisize(k) > self.params.bound:
                raise ValueError(f"{k} exceeds degree bound {self.params.bound}")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis(cls, params: FockSpaceParams, mp: Multipartition) -> "FockVector":
        return cls(params, {tuple(tuple(c) for c in mp): 1})

    @classmethod
    def vacuum(cls, params: FockSpaceParams) -> "FockVector":
        return cls(params, {((),) * params.ell: 1})

    def _check(self, other: "FockVector") -> None:
        if other.params != self.params:
            raise ValueError("Fock vectors live in different spaces")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.coeffs)
        linalg.axpy(out, 1, other.coeffs)
        return FockVector(self.params, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.coeffs)
        linalg.axpy(out, -1, other.coeffs)
        return FockVector(self.params, out)

    def __neg__(self) -> "FockVector":
        return FockVector(self.params, {k: -v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar) -> "FockVector":
        return FockVector(self.params, linalg.scale(self.coeffs, scalar))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"FockVector({format_vector(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_vector(self.coeffs)


def format_vector(coeffs: dict) -> str:
    """Canonical text form, e.g. ``1/2 [2] - 1/2 [1,1]``; ``0`` when empty."""
    if not coeffs:
        return "0"
    pieces = []
    for k in sorted(coeffs, key=basis_sort_key):
        c = coeffs[k]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_multipartition(k) if mag == 1 else f"{mag} {format_multipartition(k)}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


_TERM_RE = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*((?:\[[\d,\s]*\])(?:\s*\|\s*\[[\d,\s]*\])*)\s*"
)


def parse_vector(text: str, params: FockSpaceParams) -> FockVector:
    """Inverse of :func:`format_vector`; a bare label means coefficient 1."""
    text = text.replace("\u2212", "-").strip()
    if text == "0":
        return FockVector(params)
    coeffs: dict = {}
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"malformed Fock vector {text!r}")
        if pos > 0 and match.group(1) is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        mp = parse_multipartition(match.group(3).replace(" ", ""))
        if len(mp) != params.ell:
            raise ValueError(f"{match.group(3)!r} does not have {params.ell} components")
        coeffs[mp] = coeffs.get(mp, 0) + sign * coeff
        pos = match.end()
    return FockVector(params, coeffs)


# -- ŝl_m action -------------------------------------------------------------------


# images are cached and shared: callers must treat them as read-only
@lru_cache(maxsize=None)
def _e_image(mp: Multipartition, params: FockSpaceParams, q: int) -> dict:
    _, removable = addable_removable(mp, params.charge, params.m, q)
    out: dict = {}
    for node in removable:
        key = remove_node(mp, node)
        out[key] = out.get(key, 0) + 1
    return out


@lru_cache(maxsize=None)
def _f_image(mp: Multipartition, params: FockSpaceParams, q: int) -> dict:
    if multisize(mp) + 1 > params.bound:
        return {}
    addable, _ = addable_removable(mp, params.charge, params.m, q)
    out: dict = {}
    for node in addable:
        key = add_node(mp, node)
        out[key] = out.get(key, 0) + 1
    return out


def _apply_basiswise(v: FockVector, image) -> FockVector:
    out: dict = {}
    for mp, c in v.coeffs.items():
        linalg.axpy(out, c, image(mp))
    return FockVector(v.params, out)


def apply_e(q: int, v: FockVector) -> FockVector:
    return _apply_basiswise(v, lambda mp: _e_image(mp, v.params, q))


def apply_f(q: int, v: FockVector) -> FockVector:
    """f_q; terms beyond the degree bound are dropped."""
    return _apply_basiswise(v, lambda mp: _f_image(mp, v.params, q))


# -- Heisenberg action -------------------------------------------------------------


def fock_to_wreath_key(mp: Multipartition) -> Multipartition:
    """|λ,s⟩ ↦ S_{τλ}.  Component k of ``mp`` is λ(k+1); λ(ℓ) = λ(0) in Z_ℓ."""
    ell = len(mp)
    zl = tuple(mp[(p - 1) % ell] for p in range(ell))
    return rotate_tau(zl)


def wreath_to_fock_key(key: Multipartition) -> Multipartition:
    ell = len(key)
    zl = tuple(key[-1:]) + tuple(key[:-1])  # undo τ
    return tuple(zl[(k + 1) % ell] for k in range(ell))


def _b_image_unbounded(mp: Multipartition, m: int, r: int) -> dict:
    ell = len(mp)
    size = multisize(mp) + m * r
    f = WreathFunc.schur(fock_to_wreath_key(mp), size)
    acc: dict = {}
    for p in range(ell):
        linalg.axpy(acc, 1, wreath_mult_by_P(m * r, p, f).coeffs)
    return {wreath_to_fock_key(k): v for k, v in acc.items()}


@lru_cache(maxsize=None)
def _b_images(m: int, ell: int, r: int, n: int) -> dict:
    """b_r on every basis vector of degree n (no truncation)."""
    return {mp: _b_image_unbounded(mp, m, r) for mp in multipartitions(n, ell)}


@lru_cache(maxsize=None)
def _b_transpose(m: int, ell: int, r: int, n: int) -> dict:
    """Columns of b'_r on degree n: transpose of b_r from degree n - mr."""
    out: dict = {mp: {} for mp in multipartitions(n, ell)}
    if n - m * r < 0:
        return out
    for src, img in _b_images(m, ell, r, n - m * r).items():
        for tgt, c in img.items():
            out[tgt][src] = c
    return out


def apply_b(r: int, v: FockVector) -> FockVector:
    """b_r = multiplication by Σ_p P_{mr,p}; terms beyond the bound are dropped."""
    if r < 1:
        raise ValueError("r must be positive")
    p = v.params
    out: dict = {}
    for mp, c in v.coeffs.items():
        n = multisize(mp)
        if n + p.m * r > p.bound:
            continue
        linalg.axpy(out, c, _b_images(p.m, p.ell, r, n)[mp])
    return FockVector(p, out)


def apply_b_dual(r: int, v: FockVector) -> FockVector:
    if r < 1:
        raise ValueError("r must be positive")
    p = v.params
    out: dict = {}
    for mp, c in v.coeffs.items():
        linalg.axpy(out, c, _b_transpose(p.m, p.ell, r, multisize(mp))[mp])
    return FockVector(p, out)


def apply_casimir(v: FockVector) -> FockVector:
    """∂ = (1/mℓ) Σ_r b_r b'_r (only r ≤ n/m contribute on degree n)."""
    p = v.params
    out: dict = {}
    for mp, c in v.coeffs.items():
        linalg.axpy(out, c, _casimir_column(p.m, p.ell, mp))
    return FockVector(p, out)


@lru_cache(maxsize=None)
def _casimir_column_cached(m: int, ell: int, mp: Multipartition) -> tuple:
    n = multisize(mp)
    out: dict = {}
    for r in range(1, n // m + 1):
        lowered = _b_transpose(m, ell, r, n)[mp]
        images = _b_images(m, ell, r, n - m * r)
        for mu, c in lowered.items():
            linalg.axpy(out, c, images[mu])
    scale = Fraction(1, m * ell)
    return tuple((k, v * scale) for k, v in out.items())


def _casimir_column(m: int, ell: int, mp: Multipartition) -> dict:
    return dict(_casimir_column_cached(m, ell, mp))


def fock_pairing(u: FockVector, v: FockVector) -> Fraction:
    if u.params != v.params:
        raise ValueError("Fock vectors live in different spaces")
    return sum((c * v.coeffs[k] for k, c in u.coeffs.items() if k in v.coeffs), Fraction(0))


# -- matrices ------------------------------------------------------------------------


def dense(columns: dict, rows: Sequence, cols: Sequence) -> list[list[Fraction]]:
    """Dense row-major matrix from ``columns[col] = {row: value}``."""
    index = {r: i for i, r in enumerate(rows)}
    out = [[Fraction(0)] * len(cols) for _ in rows]
    for j, col in enumerate(cols):
        for r, v in columns.get(col, {}).items():
            out[index[r]][j] = Fraction(v)
    return out


def operator_columns(op: str, index: int, n: int, params: FockSpaceParams) -> dict:
    """Columns of an operator on the degree-n basis (as sparse images)."""
    p = params
    basis = multipartitions(n, p.ell)
    if op == "e":
        return {mp: dict(_e_image(mp, p, index)) for mp in basis}
    if op == "f":
        return {mp: dict(_f_image(mp, p, index)) for mp in basis}
    if op == "b":
        if n + p.m * index > p.bound:
            return {mp: {} for mp in basis}
        return {mp: dict(_b_images(p.m, p.ell, index, n)[mp]) for mp in basis}
    if op == "b'":
        return {mp: dict(_b_transpose(p.m, p.ell, index, n)[mp]) for mp in basis}
    if op == "casimir":
        return {mp: _casimir_column(p.m, p.ell, mp) for mp in basis}
    raise ValueError(f"unknown operator {op!r}")


def casimir_matrix(n: int, params: FockSpaceParams) -> list[list[Fraction]]:
    """Matrix of ∂ on the multipartitions of n (rows and columns in basis order)."""
    if n > params.bound:
        raise ValueError(f"degree {n} exceeds bound {params.bound}")
    basis = multipartitions(n, params.ell)
    return dense(operator_columns("casimir", 0, n, params), basis, basis)


@lru_cache(maxsize=None)
def _level1_columns(n: int, m: int, ell: int) -> dict:
    """∂_m on partitions of n: b_{mr} multiplies by p_{ℓmr}, b'_{mr} is its transpose."""
    basis = partitions(n)
    out: dict = {lam: {} for lam in basis}
    k = 1
    while m * ell * k <= n:
        size = m * ell * k
        raising = {mu: add_border_strips(mu, size) for mu in partitions(n - size)}
        transpose: dict = {lam: [] for lam in basis}
        for mu, img in raising.items():
            for lam, sign in img:
                transpose[lam].append((mu, sign))
        for lam in basis:
            col = out[lam]
            for mu, c in transpose[lam]:
                for nu, sign in raising[mu]:
                    col[nu] = col.get(nu, 0) + Fraction(c * sign, m * ell)
        k += 1
    return {lam: {k2: v for k2, v in col.items() if v} for lam, col in out.items()}


def casimir_m_matrix_level1(n: int, m: int, ell: int) -> list[list[Fraction]]:
    """Matrix of the m-th Casimir ∂_m on the level-1 Fock space of ŝl_ℓ, degree n."""
    basis = partitions(n)
    return dense(_level1_columns(n, m, ell), basis, basis)


# -- weights -------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineWeight:
    """Σ omega[p] ω_p + delta δ for an affine algebra of rank len(omega)."""

    omega: tuple
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(self.omega))
        object.__setattr__(self, "delta", Fraction(self.delta))

    @classmethod
    def zero(cls, rank: int) -> "AffineWeight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, p: int, rank: int) -> "AffineWeight":
        coords = [0] * rank
        coords[p % rank] = 1
        return cls(tuple(coords))

    @classmethod
    def null_root(cls, rank: int) -> "AffineWeight":
        return cls((0,) * rank, Fraction(1))

    @classmethod
    def simple_root(cls, q: int, rank: int) -> "AffineWeight":
        """α_q = 2ω_q - ω_{q-1} - ω_{q+1} (+ δ when q = 0)."""
        coords = [0] * rank
        coords[q % rank] += 2
        coords[(q - 1) % rank] -= 1
        coords[(q + 1) % rank] -= 1
        return cls(tuple(coords), Fraction(1 if q % rank == 0 else 0))

    @property
    def rank(self) -> int:
        return len(self.omega)

    @property
    def level(self):
        return sum(self.omega)

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        self._check(other)
        return AffineWeight(tuple(a + b for a, b in zip(self.omega, other.omega)), self.delta + other.delta)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return self + (-other)

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(tuple(-a for a in self.omega), -self.delta)

    def __rmul__(self, c) -> "AffineWeight":
        return AffineWeight(tuple(c * a for a in self.omega), c * self.delta)

    def _check(self, other: "AffineWeight") -> None:
        if self.rank != other.rank:
            raise ValueError("weights of different rank")

    def pairing(self, other: "AffineWeight") -> Fraction:
        """⟨ω_p,ω_q⟩ = min(p,q) - pq/k, ⟨ω_p,δ⟩ = 1, ⟨δ,δ⟩ = 0."""
        self._check(other)
        k = self.rank
        total = Fraction(0)
        for p, a in enumerate(self.omega):
            if not a:
                continue
            for q, b in enumerate(other.omega):
                if b:
                    total += a * b * (min(p, q) - Fraction(p * q, k))
        return total + self.delta * other.level + other.delta * self.level


def delta_shift(s: Charge, m: int) -> Fraction:
    """Δ(s,m) = ½Σ⟨ω_{s_p mod m}, ω_{s_p mod m}⟩ + ½Σ s_p(s_p/m - 1)."""
    total = Fraction(0)
    for sp in s:
        w = AffineWeight.fundamental(sp % m, m)
        total += w.pairing(w) / 2 + Fraction(sp, 2) * (Fraction(sp, m) - 1)
    return total


def weight_of(mp: Multipartition, params: FockSpaceParams) -> AffineWeight:
    """-Δ(s,m)δ + Σ_p ω_{s_p} - Σ_q n_q(λ) α_q."""
    m = params.m
    w = AffineWeight((0,) * m, -delta_shift(params.charge, m))
    for sp in params.charge:
        w = w + AffineWeight.fundamental(sp % m, m)
    for q, nq in enumerate(nodes_with_residue(mp, params.charge, m)):
        if nq:
            w = w - nq * AffineWeight.simple_root(q, m)
    return w


def residue_counts(mp: Multipartition, params: FockSpaceParams) -> tuple[int, ...]:
    return tuple(nodes_with_residue(mp, params.charge, params.m))


def weight_blocks(n: int, params: FockSpaceParams) -> dict[tuple[int, ...], list[Multipartition]]:
    """Degree-n basis split by ŝl_m weight (equivalently by residue counts)."""
    blocks: dict = {}
    for mp in multipartitions(n, params.ell):
        blocks.setdefault(residue_counts(mp, params), []).append(mp)
    return dict(sorted(blocks.items()))


def basis_vectors(params: FockSpaceParams, mps: Iterable[Multipartition]) -> list[FockVector]:
    return [FockVector.basis(params, mp) for mp in mps]
