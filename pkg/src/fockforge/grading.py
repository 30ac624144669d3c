"""Bigraded dimensions of the Fock space: depth under ŝl_m versus Casimir eigenvalue.

Every subspace below is a sum of ŝl_m weight spaces, and e_q, f_q, b'_r and ∂
all map weight spaces to weight spaces.  The engine therefore works one weight
block at a time, with vectors stored as sparse dicts over block-local indices.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg, spectral
from .errors import InvariantError
from .fock import (
    FockSpaceParams,
    FockVector,
    _b_transpose,
    _e_image,
    _f_image,
    weight_blocks,
)
from .partitions import count_multipartitions, partitions


@lru_cache(maxsize=None)
def _signature(mp, m: int) -> tuple:
    return spectral.core_signature(mp, m)


@dataclass(frozen=True)
class Subspace:
    n: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)


@dataclass
class GradedTable:
    n: int
    entries: dict = field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def row_sum(self, i: int) -> int:
        return sum(d for (a, _), d in self.entries.items() if a == i)

    def column_sum(self, j: int) -> int:
        return sum(d for (_, b), d in self.entries.items() if b == j)

    def triples(self) -> list[list[int]]:
        return [[i, j, d] for (i, j), d in sorted(self.entries.items()) if d]

    def to_json(self) -> dict:
        return {"n": self.n, "dims": self.triples()}

    def to_csv_rows(self) -> list[list[int]]:
        return [[self.n, i, j, d] for i, j, d in self.triples()]


class GradingEngine:
    """Caches per-degree, per-block subspaces for one Fock space."""

    def __init__(self, params: FockSpaceParams):
        self.params = params
        self._blocks: dict[int, dict] = {}
        self._index: dict[int, dict] = {}
        self._hw: dict[int, dict] = {}
        self._singular: dict[int, dict] = {}
        self._eig: dict[tuple[int, int], dict] = {}
        self._depth: dict[tuple[int, int], dict] = {}
        self._tables: dict[int, GradedTable] = {}

    # -- bookkeeping ------------------------------------------------------------

    def _check_degree(self, n: int) -> None:
        if not 0 <= n <= self.params.bound:
            raise ValueError(f"degree {n} outside 0..{self.params.bound}")

    def blocks(self, n: int) -> dict:
        if n not in self._blocks:
            blocks = weight_blocks(n, self.params) if n >= 0 else {}
            self._blocks[n] = blocks
            self._index[n] = {
                mp: (w, k) for w, mps in blocks.items() for k, mp in enumerate(mps)
            }
        return self._blocks[n]

    def locate(self, n: int, mp):
        self.blocks(n)
        return self._index[n][mp]

    def _to_fock(self, n: int, block, vec: dict) -> FockVector:
        mps = self.blocks(n)[block]
        return FockVector(self.params, {mps[k]: v for k, v in linalg.as_fractions(vec).items()})

    def _subspace(self, n: int, per_block: dict) -> Subspace:
        vecs = [self._to_fock(n, w, v) for w, vs in per_block.items() for v in vs]
        return Subspace(n, tuple(vecs))

    def _localise(self, n: int, image: dict) -> dict:
        """Re-key a multipartition-keyed image by global (block, index) coordinates."""
        out = {}
        for mp, c in image.items():
            w, k = self.locate(n, mp)
            out[(w, k)] = c
        return out

    # -- highest weight and singular vectors --------------------------------------

    def hw_blocks(self, n: int) -> dict:
        """∩_q ker e_q on each weight block of degree n."""
        if n not in self._hw:
            p = self.params
            out = {}
            for w, mps in self.blocks(n).items():
                images = []
                for mp in mps:
                    img = {}
                    for q in range(p.m):
                        for (tw, k), c in self._localise(n - 1, _e_image(mp, p, q)).items():
                            img[(q, tw, k)] = c
                    images.append(img)
                out[w] = linalg.kernel(images)
            self._hw[n] = out
        return self._hw[n]

    def singular_blocks(self, n: int) -> dict:
        """Joint kernel of all e_q and all b'_r."""
        if n not in self._singular:
            p = self.params
            out = {}
            for w, mps in self.blocks(n).items():
                images = []
                for mp in mps:
                    img = {}
                    for q in range(p.m):
                        for (tw, k), c in self._localise(n - 1, _e_image(mp, p, q)).items():
                            img[(0, q, tw, k)] = c
                    for r in range(1, n // p.m + 1):
                        col = _b_transpose(p.m, p.ell, r, n)[mp]
                        for (tw, k), c in self._localise(n - p.m * r, col).items():
                            img[(1, r, tw, k)] = c
                    images.append(img)
                out[w] = linalg.kernel(images)
            self._singular[n] = out
        return self._singular[n]

    # -- Casimir --------------------------------------------------------------------

    def eigen_blocks(self, n: int, j: int) -> dict:
        """ker(∂ - j) on each weight block, assembled from the core blocks inside it."""
        key = (n, j)
        if key not in self._eig:
            p = self.params
            out: dict = {w: [] for w in self.blocks(n)}
            if 0 <= j <= n // p.m:
                for sig in spectral.casimir_blocks(n, p.m, p.ell):
                    for v in spectral.eigenbasis(n, p.m, p.ell, sig)[j]:
                        local = self._localise(n, spectral.globalise(v, n, p.m, p.ell, sig))
                        w = next(iter(local))[0]
                        out[w].append({k: c for (_, k), c in local.items()})
            self._eig[key] = out
        return self._eig[key]

    def eigenvalue_range(self, n: int) -> range:
        return range(0, n // self.params.m + 1)

    def check_spectrum(self, n: int) -> None:
        """∂ has integer spectrum in 0..n/m and is diagonalisable on degree n."""
        p = self.params
        for sig in spectral.casimir_blocks(n, p.m, p.ell):
            spectral.eigenbasis(n, p.m, p.ell, sig)

    def _casimir_scaled(self, n: int, w, vec: dict) -> dict:
        """mℓ·∂ applied to a weight-block vector, core block by core block."""
        p = self.params
        mps = self.blocks(n)[w]
        parts: dict = {}
        for k, c in vec.items():
            parts.setdefault(_signature(mps[k], p.m), {})[mps[k]] = c
        out: dict = {}
        for sig, part in parts.items():
            local = spectral.localise(part, n, p.m, p.ell, sig)
            img = spectral.apply_scaled(spectral.scaled_columns(n, p.m, p.ell, sig), local)
            out.update(spectral.globalise(img, n, p.m, p.ell, sig))
        return {k: c for (_, k), c in self._localise(n, out).items()}

    def hw_eigen_blocks(self, n: int, j: int) -> dict:
        """hw(n) ∩ ker(∂ - j), from the matrix of ∂ in a basis of hw(n)."""
        key = ("hw", n, j)
        if key not in self._eig:
            self.check_spectrum(n)
            scale = self.params.m * self.params.ell
            out = {}
            for w, vecs in self.hw_blocks(n).items():
                ech = linalg.Echelon(track=True)
                for k, v in enumerate(vecs):
                    ech.add(v, {k: 1})
                images = []
                for k, v in enumerate(vecs):
                    rest, combo, _ = ech.reduce(self._casimir_scaled(n, w, v), {})
                    if rest:
                        raise InvariantError(f"∂ does not preserve hw({n})")
                    col = linalg.scale(combo, -1)
                    linalg.axpy(col, -scale * j, {k: 1})
                    images.append(col)
                basis = []
                for coeffs in linalg.kernel(images):
                    vec: dict = {}
                    for k, c in coeffs.items():
                        linalg.axpy(vec, c, vecs[k])
                    basis.append(vec)
                out[w] = linalg.span_basis(basis)
            self._eig[key] = out
        return self._eig[key]

    # -- depth ----------------------------------------------------------------------

    def depth_blocks(self, n: int, i: int) -> dict:
        """Span of f_{q1}...f_{qi} applied to highest weight vectors of degree n - i."""
        key = (n, i)
        if key in self._depth:
            return self._depth[key]
        if i < 0 or i > n:
            out = {w: [] for w in self.blocks(n)}
        elif i == 0:
            out = self.hw_blocks(n)
        else:
            out = self._push_down(n, self.depth_blocks(n - 1, i - 1))
        self._depth[key] = out
        return out

    def _push_down(self, n: int, lower: dict) -> dict:
        """Span of all f_q applied to a per-block family in degree n - 1."""
        p = self.params
        gathered: dict = {w: [] for w in self.blocks(n)}
        for w, vecs in lower.items():
            mps = self.blocks(n - 1)[w]
            for vec in vecs:
                for q in range(p.m):
                    img: dict = {}
                    for k, c in vec.items():
                        linalg.axpy(img, c, _f_image(mps[k], p, q))
                    if not img:
                        continue
                    local = self._localise(n, img)
                    tw = next(iter(local))[0]
                    gathered[tw].append({k: c for (_, k), c in local.items()})
        # rank saturation: a block cannot exceed its dimension
        return {w: linalg.span_basis(vs) for w, vs in gathered.items()}

    def depth_eigen_blocks(self, n: int, i: int, j: int) -> dict:
        """f-words of length i applied to hw(n - i) ∩ ker(∂ - j).

        ∂ commutes with every f_q, so this is depth_space(n, i) ∩ ker(∂ - j).
        """
        key = ("depth", n, i, j)
        if key not in self._eig:
            if i < 0 or i > n:
                out = {w: [] for w in self.blocks(n)}
            elif i == 0:
                out = self.hw_eigen_blocks(n, j)
            else:
                out = self._push_down(n, self.depth_eigen_blocks(n - 1, i - 1, j))
            self._eig[key] = out
        return self._eig[key]

    # -- tables ---------------------------------------------------------------------

    def graded_table(self, n: int) -> GradedTable:
        if n in self._tables:
            return self._tables[n]
        self._check_degree(n)
        self.check_spectrum(n)
        entries: dict = {}
        for i in range(n + 1):
            for j in range(0, (n - i) // self.params.m + 1):
                d = _dims(self.depth_eigen_blocks(n, i, j))
                if d:
                    entries[(i, j)] = d
        total, expected = sum(entries.values()), count_multipartitions(n, self.params.ell)
        if total != expected:
            raise InvariantError(f"graded pieces on degree {n} sum to {total} != {expected}")
        table = GradedTable(n, dict(sorted(entries.items())))
        self._tables[n] = table
        return table

    def graded_table_by_intersection(self, n: int) -> GradedTable:
        """The same table from depth_space ∩ casimir_eigenspace, block by block."""
        self._check_degree(n)
        entries: dict = {}
        for w in self.blocks(n):
            for i in range(n + 1):
                depth = self.depth_blocks(n, i)[w]
                if not depth:
                    continue
                for j in self.eigenvalue_range(n):
                    eig = self.eigen_blocks(n, j)[w]
                    if eig:
                        d = len(linalg.intersect(depth, eig))
                        if d:
                            entries[(i, j)] = entries.get((i, j), 0) + d
        return GradedTable(n, dict(sorted(entries.items())))


@lru_cache(maxsize=64)
def engine(params: FockSpaceParams) -> GradingEngine:
    return GradingEngine(params)


def _dims(per_block: dict) -> int:
    return sum(len(v) for v in per_block.values())


def highest_weight_space(n: int, params: FockSpaceParams) -> Subspace:
    eng = engine(params)
    eng._check_degree(n)
    return eng._subspace(n, eng.hw_blocks(n))


def singular_space(n: int, params: FockSpaceParams) -> Subspace:
    eng = engine(params)
    eng._check_degree(n)
    return eng._subspace(n, eng.singular_blocks(n))


def casimir_eigenspace(n: int, j: int, params: FockSpaceParams) -> Subspace:
    if j < 0:
        raise ValueError("eigenvalue must be nonnegative")
    eng = engine(params)
    eng._check_degree(n)
    return eng._subspace(n, eng.eigen_blocks(n, j))


def depth_space(n: int, i: int, params: FockSpaceParams) -> Subspace:
    if not 0 <= i <= n:
        raise ValueError("depth must lie in 0..n")
    eng = engine(params)
    eng._check_degree(n)
    return eng._subspace(n, eng.depth_blocks(n, i))


def graded_dims(n: int, params: FockSpaceParams) -> GradedTable:
    return engine(params).graded_table(n)


def graded_dims_by_intersection(n: int, params: FockSpaceParams) -> GradedTable:
    return engine(params).graded_table_by_intersection(n)


def hw_dim(n: int, params: FockSpaceParams) -> int:
    return _dims(engine(params).hw_blocks(n))


def singular_dim(n: int, params: FockSpaceParams) -> int:
    return _dims(engine(params).singular_blocks(n))


# -- generating functions -------------------------------------------------------


def heisenberg_series(m: int, bound: int) -> list[int]:
    """Σ_r #P_r t^{mr}, truncated at t^bound."""
    return [len(partitions(k // m)) if k % m == 0 else 0 for k in range(bound + 1)]


def series_divide(num: list, den: list) -> list[Fraction]:
    if not den or den[0] == 0:
        raise ZeroDivisionError("series denominator has zero constant term")
    out: list[Fraction] = []
    for n in range(len(num)):
        acc = Fraction(num[n])
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / den[0])
    return out


def series_multiply(a: list, b: list, bound: int) -> list:
    out = [0] * (bound + 1)
    for i, x in enumerate(a[: bound + 1]):
        if x:
            for j, y in enumerate(b[: bound + 1 - i]):
                out[i + j] += x * y
    return out


def findim_counts(params: FockSpaceParams) -> list[int]:
    """h_0..h_N with (Σ h_k t^k)(Σ #P_r t^{mr}) = Σ dim hw(n) t^n."""
    N = params.bound
    K = [hw_dim(n, params) for n in range(N + 1)]
    h = series_divide(K, heisenberg_series(params.m, N))
    for k, x in enumerate(h):
        if x.denominator != 1 or x < 0:
            raise InvariantError(f"h_{k} = {x} is not a nonnegative integer")
    h = [int(x) for x in h]
    if series_multiply(h, heisenberg_series(params.m, N), N) != K:
        raise InvariantError("deconvolution does not reproduce K(t)")
    return h


def hw_eigen_count_check(n: int, j: int, params: FockSpaceParams) -> bool:
    """dim(hw(n) ∩ eig_j(n)) = #P_j · h_{n-mj}."""
    lhs = _dims(engine(params).hw_eigen_blocks(n, j)) if j <= n // params.m else 0
    rest = n - params.m * j
    rhs = len(partitions(j)) * singular_dim(rest, params) if rest >= 0 else 0
    return lhs == rhs


isom1_check = hw_eigen_count_check


# -- filtration order -------------------------------------------------------------


def precedes(a: tuple[int, int], b: tuple[int, int], m: int) -> bool:
    """(i',j') ≤ (i,j)  iff  i - i' ≥ max(0, (j' - j) m)."""
    (i1, j1), (i2, j2) = a, b
    return i2 - i1 >= max(0, (j1 - j2) * m)


def valid_pairs(n: int, m: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n // m + 1) for i in range(n - m * j + 1)]


def filtration_dims(table: GradedTable, m: int) -> dict:
    """dim F_{i,j} = Σ over (i',j') ≤ (i,j) of the graded dimensions."""
    pairs = valid_pairs(table.n, m)
    return {b: sum(table.get(*a) for a in pairs if precedes(a, b, m)) for b in pairs}


def total_dim(n: int, params: FockSpaceParams) -> int:
    return count_multipartitions(n, params.ell)


def table_csv(tables: list[GradedTable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "i", "j", "dim"])
    for t in tables:
        writer.writerows(t.to_csv_rows())
    return buf.getvalue()
