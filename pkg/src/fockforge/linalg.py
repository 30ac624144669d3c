"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping ordered coordinates to nonzero rationals.  Inputs may
hold ``int`` or ``Fraction`` values; eliminated rows are kept as ``gmpy2.mpq``,
which is an order of magnitude faster than ``Fraction`` and mixes with it
freely.  Use ``as_fractions`` at API boundaries.

Elimination always pivots on the smallest nonzero coordinate, so a pivot row
never has entries to the left of its pivot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

SparseVec = dict


def as_fractions(vec: SparseVec) -> SparseVec:
    return {k: Fraction(int(v.numerator), int(v.denominator)) for k, v in vec.items()}


def axpy(target: SparseVec, coeff, source: SparseVec) -> None:
    """target += coeff * source, in place, dropping zeros."""
    for k, v in source.items():
        new = target.get(k, 0) + coeff * v
        if new:
            target[k] = new
        else:
            target.pop(k, None)


def scale(vec: SparseVec, coeff) -> SparseVec:
    if not coeff:
        return {}
    return {k: coeff * v for k, v in vec.items()}


class Echelon:
    """Incrementally maintained row-echelon basis of a span.

    Each stored row is normalised to pivot value 1.  ``track`` keeps, for every
    row, the combination of inserted vectors that produced it, which is what the
    kernel computation needs.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[int, SparseVec] = {}
        self.track = track
        self.combos: dict[int, SparseVec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVec, combo: SparseVec | None = None):
        vec = dict(vec)
        combo = dict(combo) if combo is not None else None
        while vec:
            col = min(vec)
            row = self.rows.get(col)
            if row is None:
                return vec, combo, col
            coeff = -vec[col]
            axpy(vec, coeff, row)
            if combo is not None:
                axpy(combo, coeff, self.combos[col])
        return vec, combo, None

    def add(self, vec: SparseVec, combo: SparseVec | None = None):
        """Insert ``vec``; return the residual combination if it was dependent."""
        vec, combo, col = self.reduce(vec, combo)
        if col is None:
            return combo if combo is not None else {}
        inv = mpq(1) / vec[col]
        self.rows[col] = scale(vec, inv)
        if combo is not None:
            self.combos[col] = scale(combo, inv)
        return None

    def contains(self, vec: SparseVec) -> bool:
        return self.reduce(vec)[2] is None

    def basis(self) -> list[SparseVec]:
        return [self.rows[c] for c in sorted(self.rows)]


def span_basis(vectors: Iterable[SparseVec]) -> list[SparseVec]:
    ech = Echelon()
    for v in vectors:
        if v:
            ech.add(v)
    return ech.basis()


def rank(vectors: Iterable[SparseVec]) -> int:
    ech = Echelon()
    for v in vectors:
        if v:
            ech.add(v)
    return len(ech)


def kernel(images: Sequence[SparseVec]) -> list[SparseVec]:
    """Kernel of the map sending coordinate vector e_i to ``images[i]``.

    The result is a list of coefficient vectors (dicts keyed by i).
    """
    ech = Echelon(track=True)
    out = []
    for i, img in enumerate(images):
        residual = ech.add(img, {i: mpq(1)})
        if residual is not None:
            out.append(residual)
    return span_basis(out)


def joint_kernel(dim: int, maps: Sequence[Callable[[int], SparseVec]]) -> list[SparseVec]:
    """Intersection of kernels of several maps on a ``dim``-dimensional space.

    Each map is given as a function from a basis index to its (sparse) image;
    images of different maps are placed in disjoint coordinate ranges by
    tagging coordinates with the map index.
    """
    images = []
    for i in range(dim):
        img: SparseVec = {}
        for t, f in enumerate(maps):
            for k, v in f(i).items():
                img[(k, t)] = v
        images.append(img)
    # tuple coordinates are ordered, so min() pivoting still works
    return kernel(images)


def intersect(u: Sequence[SparseVec], v: Sequence[SparseVec]) -> list[SparseVec]:
    """Basis of span(u) ∩ span(v)."""
    if not u or not v:
        return []
    u = span_basis(u)
    v = span_basis(v)
    images = list(u) + [scale(x, -1) for x in v]
    out = []
    for combo in kernel(images):
        vec: SparseVec = {}
        for i, c in combo.items():
            if i < len(u):
                axpy(vec, c, u[i])
        if vec:
            out.append(vec)
    return span_basis(out)


def apply_matrix(rows: dict[int, SparseVec], vec: SparseVec) -> SparseVec:
    """Multiply a column-sparse matrix (col -> image) by ``vec``."""
    out: SparseVec = {}
    for k, c in vec.items():
        col = rows.get(k)
        if col:
            axpy(out, c, col)
    return out
