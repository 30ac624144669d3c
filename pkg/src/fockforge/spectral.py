"""Eigenspaces of the Casimir operator ∂ on multipartitions.

∂ does not depend on the charge, and b_r, b'_r add or remove ribbons of length
mr, which leaves the m-core of every component unchanged.  So ∂ is block
diagonal over (degree, tuple of m-cores), and the blocks are shared by every
charge.

On a block, ker ∂ is computed by elimination.  The other eigenspaces come from
the Heisenberg relations: b_ν applied to ker ∂ in degree n - m|ν| lands in
eigenvalue |ν|.  Each produced vector is checked against ∂ exactly and the
dimensions must fill the block, which pins down every ker(∂ - j).
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from . import linalg
from .errors import InvariantError
from .fock import _b_images, _b_transpose, _casimir_column
from .partitions import core_quotient, multipartitions, partitions


def core_signature(mp, m: int) -> tuple:
    return tuple(core_quotient(lam, m).core for lam in mp)


@lru_cache(maxsize=None)
def casimir_blocks(n: int, m: int, ell: int) -> dict:
    out: dict = {}
    for mp in multipartitions(n, ell):
        out.setdefault(core_signature(mp, m), []).append(mp)
    return {sig: tuple(mps) for sig, mps in out.items()}


def block_members(n: int, m: int, ell: int, sig) -> tuple:
    return casimir_blocks(n, m, ell).get(sig, ()) if n >= 0 else ()


@lru_cache(maxsize=None)
def _local_index(n: int, m: int, ell: int, sig) -> dict:
    return {mp: k for k, mp in enumerate(block_members(n, m, ell, sig))}


@lru_cache(maxsize=None)
def scaled_columns(n: int, m: int, ell: int, sig) -> tuple:
    """Columns of mℓ·∂ on a block, integer valued, in block-local indices."""
    index = _local_index(n, m, ell, sig)
    cols = []
    for mp in block_members(n, m, ell, sig):
        col = {}
        for mu, c in _casimir_column(m, ell, mp).items():
            if mu not in index:
                raise InvariantError("∂ leaves its core block")
            c *= m * ell
            if c.denominator != 1:
                raise InvariantError("mℓ·∂ has a non-integer entry")
            col[index[mu]] = int(c)
        cols.append(col)
    return tuple(cols)


def localise(vec: dict, n: int, m: int, ell: int, sig) -> dict:
    index = _local_index(n, m, ell, sig)
    return {index[mp]: c for mp, c in vec.items()}


def globalise(vec: dict, n: int, m: int, ell: int, sig) -> dict:
    mps = block_members(n, m, ell, sig)
    return {mps[k]: c for k, c in vec.items()}


@lru_cache(maxsize=None)
def casimir_kernel(n: int, m: int, ell: int, sig) -> tuple:
    return tuple(linalg.kernel(scaled_columns(n, m, ell, sig)))


@lru_cache(maxsize=None)
def vacuum_space(n: int, m: int, ell: int, sig) -> tuple:
    """∩_r ker b'_r on a block."""
    images = []
    for mp in block_members(n, m, ell, sig):
        img = {}
        for r in range(1, n // m + 1):
            for mu, c in _b_transpose(m, ell, r, n)[mp].items():
                img[(r, mu)] = c
        images.append(img)
    return tuple(linalg.kernel(images))


def raise_by(vec: dict, nu, m: int, ell: int) -> dict:
    """b_{ν_1} ... b_{ν_k} applied to a multipartition-keyed vector."""
    for r in nu:
        out: dict = {}
        for mp, c in vec.items():
            n = sum(map(sum, mp))
            linalg.axpy(out, c, _b_images(m, ell, r, n)[mp])
        vec = out
    return vec


def apply_scaled(cols, vec: dict) -> dict:
    return linalg.apply_matrix(dict(enumerate(cols)), vec)


@lru_cache(maxsize=None)
def eigenbasis(n: int, m: int, ell: int, sig) -> tuple:
    """Bases of ker(∂ - j) on a block for j = 0..n/m, as block-local vectors."""
    members = block_members(n, m, ell, sig)
    cols = scaled_columns(n, m, ell, sig)
    out = [list(casimir_kernel(n, m, ell, sig))]
    for j in range(1, n // m + 1):
        lower = n - m * j
        candidates = []
        for v in casimir_kernel(lower, m, ell, sig):
            seed = globalise(v, lower, m, ell, sig)
            for nu in partitions(j):
                img = raise_by(seed, nu, m, ell)
                if img:
                    candidates.append(localise(img, n, m, ell, sig))
        basis = linalg.span_basis(candidates)
        for v in basis:
            residual = apply_scaled(cols, v)
            linalg.axpy(residual, -m * ell * j, v)
            if residual:
                raise InvariantError(f"b_ν(ker ∂) is not in eigenvalue {j} on degree {n}")
        out.append(basis)
    total = sum(len(b) for b in out)
    if total != len(members):
        raise InvariantError(
            f"∂ eigenspaces on degree {n}, block {sig} have total dim {total} != {len(members)}"
        )
    return tuple(tuple(b) for b in out)


def eigenspace_dims(n: int, m: int, ell: int) -> dict:
    dims: dict = {}
    for sig in casimir_blocks(n, m, ell):
        for j, b in enumerate(eigenbasis(n, m, ell, sig)):
            dims[j] = dims.get(j, 0) + len(b)
    return dims


def eigenvector_in(vec: dict, n: int, m: int, ell: int, sig, j: int) -> bool:
    residual = apply_scaled(scaled_columns(n, m, ell, sig), vec)
    linalg.axpy(residual, -m * ell * j, vec)
    return not residual


def project(vec: dict, n: int, m: int, ell: int, sig, j: int) -> dict:
    """Component of a block-local vector in eigenvalue j (up to a nonzero scalar).

    Uses Π_{k≠j} (∂ - k), valid because the block spectrum is 0..n/m and ∂ is
    diagonalisable there (established by ``eigenbasis``).
    """
    eigenbasis(n, m, ell, sig)
    cols = scaled_columns(n, m, ell, sig)
    for k in range(n // m + 1):
        if k == j:
            continue
        nxt = apply_scaled(cols, vec)
        linalg.axpy(nxt, -m * ell * k, vec)
        vec = nxt
        if not vec:
            break
    return vec


def kernel_matches_vacuum(n: int, m: int, ell: int) -> bool:
    """ker ∂ = ∩_r ker b'_r on every block of degree n."""
    for sig in casimir_blocks(n, m, ell):
        a = casimir_kernel(n, m, ell, sig)
        b = vacuum_space(n, m, ell, sig)
        if len(a) != len(b):
            return False
        ech = linalg.Echelon()
        for v in a:
            ech.add(v)
        if not all(ech.contains(v) for v in b):
            return False
    return True
