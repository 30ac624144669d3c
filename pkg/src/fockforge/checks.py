"""The invariant suite run by ``fockforge check``.

Every check takes the run parameters and the crystal node order and returns
``None`` when the invariant holds or a short description of the first
counterexample.  Scale follows the configured degree bound.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import crystal, grading, levelrank, linalg, spectral
from .errors import InvariantError
from .fock import (
    AffineWeight,
    FockSpaceParams,
    _b_images,
    _b_transpose,
    _casimir_column,
    _e_image,
    _f_image,
    _level1_columns,
    weight_of,
)
from .partitions import (
    addable_removable,
    conjugate,
    content_polynomial,
    core_quotient,
    cores,
    format_multipartition,
    format_partition,
    multipartitions,
    multisize,
    nodes_with_residue,
    partitions,
    rebuild_from_core_quotient,
)
from .symfunc import (
    SymFunc,
    hall_pairing,
    induce_from_sym,
    mult_by_power_sum,
    plethysm_psi,
    power_to_schur,
    product as sym_product,
    schur_to_power,
    wreath_pairing,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _fmt(mp) -> str:
    return format_multipartition(mp)


def compose(outer: Callable[[object], dict], vec: dict) -> dict:
    out: dict = {}
    for k, c in vec.items():
        linalg.axpy(out, c, outer(k))
    return out


def commutator(a: Callable, b: Callable, key) -> dict:
    """[a, b] applied to a basis vector, with a and b given as key -> image maps."""
    ab = compose(a, b(key))
    linalg.axpy(ab, -1, compose(b, a(key)))
    return ab


# -- partitions ---------------------------------------------------------------------


def check_conjugation(params, order):
    for n in range(params.bound + 1):
        for lam in partitions(n):
            if conjugate(conjugate(lam)) != lam:
                return f"conjugation is not involutive at {format_partition(lam)}"


def check_core_quotient(params, order):
    for ell in (2, 3, 4):
        for n in range(params.bound + 1):
            for lam in partitions(n):
                cq = core_quotient(lam, ell)
                weight = sum(map(sum, cq.quotient))
                if n != sum(cq.core) + ell * weight:
                    return f"size identity fails for {format_partition(lam)}, ℓ={ell}"
                expected = Counter()
                for c, k in content_polynomial(cq.core).items():
                    expected[c % ell] += k
                for p in range(ell):
                    expected[p] += weight
                got = Counter()
                for c, k in content_polynomial(lam).items():
                    got[c % ell] += k
                if +got != +expected:
                    return f"content congruence fails for {format_partition(lam)}, ℓ={ell}"
                if rebuild_from_core_quotient(cq, ell) != lam:
                    return f"core/quotient round trip fails for {format_partition(lam)}, ℓ={ell}"


def check_residue_counts(params, order):
    for n in range(params.bound + 1):
        for mp in multipartitions(n, params.ell):
            for m in range(1, params.m + 2):
                if sum(nodes_with_residue(mp, params.charge, m)) != n:
                    return f"residue counts do not sum to the size at {_fmt(mp)}, m={m}"


# -- symmetric functions --------------------------------------------------------------


def check_basis_change(params, order):
    for n in range(params.bound + 1):
        for lam in partitions(n):
            back = SymFunc(schur_to_power(lam).coeffs, "power", n).to_schur()
            if back.coeffs != {lam: 1}:
                return f"schur -> power -> schur is not the identity at {format_partition(lam)}"
            forth = SymFunc(power_to_schur(lam).coeffs, "schur", n).to_power()
            if forth.coeffs != {lam: 1}:
                return f"power -> schur -> power is not the identity at {format_partition(lam)}"


def _power_derivative(r: int, f: SymFunc) -> SymFunc:
    """r ∂/∂p_r, the Hall adjoint of multiplication by p_r."""
    out: dict = {}
    for lam, c in f.to_power().coeffs.items():
        k = lam.count(r)
        if k:
            rest = list(lam)
            rest.remove(r)
            out[tuple(rest)] = out.get(tuple(rest), 0) + r * k * c
    return SymFunc(out, "power", f.bound)


def check_power_sum_adjoint(params, order):
    N = params.bound
    for r in range(1, N + 1):
        for n in range(N - r + 1):
            for lam in partitions(n):
                image = mult_by_power_sum(r, SymFunc.schur(lam, N))
                for mu in partitions(n + r):
                    down = _power_derivative(r, SymFunc.schur(mu, N))
                    if hall_pairing(image, SymFunc.schur(mu, N)) != hall_pairing(SymFunc.schur(lam, N), down):
                        return f"p_{r} adjoint mismatch at {format_partition(lam)}, {format_partition(mu)}"


def check_plethysm_multiplicative(params, order):
    N = params.bound
    for m in (2, 3):
        top = N // m
        for a in range(top + 1):
            for b in range(top - a + 1):
                for lam in partitions(a):
                    for mu in partitions(b):
                        f, g = SymFunc.power(lam, N), SymFunc.power(mu, N)
                        lhs = plethysm_psi(m, sym_product(f, g))
                        rhs = sym_product(plethysm_psi(m, f), plethysm_psi(m, g))
                        if lhs != rhs:
                            return f"psi^{m} is not multiplicative on p{list(lam)}, p{list(mu)}"


def check_induced_pairing(params, order):
    """⟨Ind p_λ, Ind p_μ⟩ = δ_{λμ} z_λ ℓ^{l(λ)}."""
    from .partitions import z_value

    N, ell = params.bound, params.ell
    for n in range(N + 1):
        induced = {lam: induce_from_sym(SymFunc.power(lam, N), ell, N) for lam in partitions(n)}
        for lam, f in induced.items():
            for mu, g in induced.items():
                want = z_value(lam) * ell ** len(lam) if lam == mu else 0
                if wreath_pairing(f, g) != want:
                    return f"induced power sums p{list(lam)}, p{list(mu)} pair wrongly"


# -- Fock space ---------------------------------------------------------------------------


def check_chevalley(params, order):
    p = params
    for n in range(p.bound):
        for mp in multipartitions(n, p.ell):
            for q in range(p.m):
                for q2 in range(p.m):
                    got = commutator(
                        lambda x: _e_image(x, p, q), lambda x: _f_image(x, p, q2), mp
                    )
                    want = {}
                    if q == q2:
                        a, r = addable_removable(mp, p.charge, p.m, q)
                        if len(a) != len(r):
                            want = {mp: len(a) - len(r)}
                    if got != want:
                        return f"[e_{q}, f_{q2}] wrong on {_fmt(mp)}"


def check_heisenberg(params, order):
    p = params
    N = p.bound

    def b(r):
        return lambda x: _b_images(p.m, p.ell, r, multisize(x))[x]

    def bd(r):
        return lambda x: _b_transpose(p.m, p.ell, r, multisize(x))[x]

    for r in range(1, N // p.m + 1):
        for t in range(1, N // p.m + 1):
            for n in range(N - p.m * t + 1):
                for mp in multipartitions(n, p.ell):
                    got = commutator(bd(r), b(t), mp)
                    want = {mp: r * p.m * p.ell} if r == t else {}
                    if got != want:
                        return f"[b'_{r}, b_{t}] wrong on {_fmt(mp)}"
        for n in range(N - p.m * r):
            for mp in multipartitions(n, p.ell):
                for q in range(p.m):
                    e = lambda x: _e_image(x, p, q)
                    f = lambda x: _f_image(x, p, q)
                    if commutator(e, b(r), mp) or commutator(f, b(r), mp):
                        return f"b_{r} does not commute with e_{q}/f_{q} on {_fmt(mp)}"
        for n in range(p.m * r, N + 1):
            for mp in multipartitions(n, p.ell):
                for q in range(p.m):
                    if commutator(lambda x: _e_image(x, p, q), bd(r), mp):
                        return f"b'_{r} does not commute with e_{q} on {_fmt(mp)}"


def check_casimir(params, order):
    p = params
    N = p.bound
    cas = lambda x: _casimir_column(p.m, p.ell, x)
    for n in range(N + 1):
        for mp in multipartitions(n, p.ell):
            for mu, c in cas(mp).items():
                if cas(mu).get(mp, 0) != c:
                    return f"∂ is not symmetric at {_fmt(mp)}, {_fmt(mu)}"
        for r in range(1, (N - n) // p.m + 1):
            b = lambda x: _b_images(p.m, p.ell, r, multisize(x))[x]
            for mp in multipartitions(n, p.ell):
                got = commutator(cas, b, mp)
                if got != {k: r * c for k, c in b(mp).items()}:
                    return f"[∂, b_{r}] != {r} b_{r} on {_fmt(mp)}"
        if not spectral.kernel_matches_vacuum(n, p.m, p.ell):
            return f"ker ∂ differs from the joint kernel of the b'_r in degree {n}"
        for sig in spectral.casimir_blocks(n, p.m, p.ell):
            spectral.eigenbasis(n, p.m, p.ell, sig)


def check_weights(params, order):
    p = params
    for n in range(p.bound):
        for mp in multipartitions(n, p.ell):
            w = weight_of(mp, p)
            for q in range(p.m):
                alpha = AffineWeight.simple_root(q, p.m)
                for mu in _f_image(mp, p, q):
                    if weight_of(mu, p) != w - alpha:
                        return f"f_{q} does not lower the weight by α_{q} at {_fmt(mp)}"
                for mu in _e_image(mp, p, q):
                    if weight_of(mu, p) != w + alpha:
                        return f"e_{q} does not raise the weight by α_{q} at {_fmt(mp)}"


def check_level1_casimir(params, order):
    m, ell = params.m, params.ell
    for n in range(params.bound + 1):
        cols = _level1_columns(n, m, ell)
        for lam, col in cols.items():
            for mu, c in col.items():
                if cols[mu].get(lam, 0) != c:
                    return f"∂_m is not symmetric at {format_partition(lam)}"
                if core_quotient(mu, ell).core != core_quotient(lam, ell).core:
                    return f"∂_m changes the ℓ-core at {format_partition(lam)}"


# -- grading -------------------------------------------------------------------------------


def check_casimir_commutes(params, order):
    p = params
    cas = lambda x: _casimir_column(p.m, p.ell, x)
    for n in range(p.bound):
        for mp in multipartitions(n, p.ell):
            for q in range(p.m):
                if commutator(cas, lambda x: _f_image(x, p, q), mp):
                    return f"∂ does not commute with f_{q} on {_fmt(mp)}"
                if commutator(cas, lambda x: _e_image(x, p, q), mp):
                    return f"∂ does not commute with e_{q} on {_fmt(mp)}"


def check_graded_tables(params, order):
    p = params
    for n in range(p.bound + 1):
        table = grading.graded_dims(n, p)
        if table.total() != len(multipartitions(n, p.ell)):
            return f"table for n={n} does not add up to the degree-{n} dimension"
        for (i, j), d in table.entries.items():
            if d and (i < 0 or j < 0 or i + p.m * j > n):
                return f"entry ({i},{j}) outside the support for n={n}"
        for i in range(n + 1):
            if table.row_sum(i) != grading._dims(grading.engine(p).depth_blocks(n, i)):
                return f"row {i} of the n={n} table differs from dim depth_space"
        for j in range(n // p.m + 1):
            if table.column_sum(j) != spectral.eigenspace_dims(n, p.m, p.ell).get(j, 0):
                return f"column {j} of the n={n} table differs from the eigenspace dimension"


def check_dual_route(params, order):
    p = params
    for n in range(min(p.bound, 6) + 1):
        if grading.graded_dims(n, p).entries != grading.graded_dims_by_intersection(n, p).entries:
            return f"graded table for n={n} disagrees with depth ∩ eigenspace"


def check_filtration(params, order):
    p = params
    for n in range(p.bound + 1):
        dims = grading.filtration_dims(grading.graded_dims(n, p), p.m)
        pairs = list(dims)
        for a in pairs:
            for b in pairs:
                if grading.precedes(a, b, p.m) and dims[a] > dims[b]:
                    return f"filtration not monotone between {a} and {b} for n={n}"


def check_depth_decomposition(params, order):
    """The depth spaces of one degree are independent and fill the whole degree."""
    p = params
    eng = grading.engine(p)
    for n in range(p.bound + 1):
        for w, mps in eng.blocks(n).items():
            stacked = [v for i in range(n + 1) for v in eng.depth_blocks(n, i)[w]]
            if linalg.rank(stacked) != len(mps) or len(stacked) != len(mps):
                return f"depth spaces do not split weight block {w} of degree {n}"


def check_generating_function(params, order):
    p = params
    h = grading.findim_counts(p)
    singular = [grading.singular_dim(n, p) for n in range(p.bound + 1)]
    if h != singular:
        return f"deconvolution {h} differs from singular dimensions {singular}"
    for n in range(p.bound + 1):
        for j in range(n // p.m + 2):
            if not grading.hw_eigen_count_check(n, j, p):
                return f"hw ∩ eigenvalue {j} has the wrong dimension for n={n}"


# -- crystal -------------------------------------------------------------------------------


def check_crystal_inverse(params, order):
    p = params
    for n in range(p.bound):
        for mp in multipartitions(n, p.ell):
            for q in range(p.m):
                up = crystal.tilde_f(q, mp, p, order)
                if up is not None and crystal.tilde_e(q, up, p, order) != mp:
                    return f"ẽ_{q} f̃_{q} is not the identity at {_fmt(mp)}"
                down = crystal.tilde_e(q, mp, p, order)
                if down is not None and crystal.tilde_f(q, down, p, order) != mp:
                    return f"f̃_{q} ẽ_{q} is not the identity at {_fmt(mp)}"
                eps, phi = crystal.epsilon_phi(q, mp, p, order)
                a, r = addable_removable(mp, p.charge, p.m, q)
                if phi - eps != len(a) - len(r):
                    return f"q-string length disagrees with A_q - R_q at {_fmt(mp)}"


def check_crystal_hw_count(params, order):
    p = params
    g = crystal.build_graph(p, order)
    for n in range(p.bound + 1):
        if len(g.highest_weight_vertices(n)) != grading.hw_dim(n, p):
            return f"highest weight vertices at n={n} differ from dim hw"


def check_crystal_depth(params, order):
    p = params
    g = crystal.build_graph(p, order)
    for n in range(p.bound + 1):
        table = grading.graded_dims(n, p)
        want = {i: table.row_sum(i) for i in range(n + 1) if table.row_sum(i)}
        if crystal.depth_census(g, n) != want:
            return f"depth census at n={n} differs from the table row sums"


# -- level-rank ----------------------------------------------------------------------------


def check_pairing_table(params, order):
    for k in range(1, 6):
        for a in range(k):
            for b in range(k):
                got = AffineWeight.fundamental(a, k).pairing(AffineWeight.fundamental(b, k))
                if got != min(a, b) - Fraction(a * b, k):
                    return f"⟨ω_{a}, ω_{b}⟩ wrong for rank {k}"
            delta = AffineWeight.null_root(k)
            if AffineWeight.fundamental(a, k).pairing(delta) != 1 or delta.pairing(delta) != 0:
                return f"pairing with δ wrong for rank {k}"


def check_translations(params, order):
    for ell in (2, 3):
        lattice = list(levelrank.lattice_window(ell, -2, 2))
        weights = [AffineWeight.fundamental(a, ell) + b for a in range(ell) for b in lattice[:6]]
        for beta in lattice:
            for gamma in lattice[:8]:
                for mu in weights:
                    once = levelrank.xi_action(beta, levelrank.xi_action(gamma, mu))
                    if once != levelrank.xi_action(beta + gamma, mu):
                        return f"ξ group law fails for ℓ={ell}"
                    if levelrank.xi_action(-beta, levelrank.xi_action(beta, mu)) != mu:
                        return f"ξ_β ξ_-β is not the identity for ℓ={ell}"
            for mu in weights:
                for nu in weights[:4]:
                    a = levelrank.xi_action(beta, mu).pairing(levelrank.xi_action(beta, nu))
                    if a != mu.pairing(nu):
                        return f"ξ is not an isometry for ℓ={ell}"


def check_gamma(params, order):
    for ell in range(1, 5):
        for s in product(range(-4, 5), repeat=ell):
            if sum(s):
                continue
            gam = levelrank.gamma_of_charge(s)
            if gam.pairing(gam) != sum(x * x for x in s):
                return f"⟨γ,γ⟩ != Σ s_p² for s={s}"
            vac = AffineWeight.fundamental(0, ell)
            for m in range(2, 5):
                if levelrank.gamma_hat(s, m) != levelrank.prime_lift(levelrank.xi_action(-gam, vac), m):
                    return f"γ̂(s,{m}) differs from the lifted translate for s={s}"


def check_dagger(params, order):
    for ell in range(1, 5):
        for m in range(1, 5):
            source = levelrank.bounded_tuples(ell, m, 0, -m, m)
            target = levelrank.bounded_tuples(m, ell, 0, -ell, ell)
            images = [levelrank.dagger(lam, m) for lam in source]
            if sorted(images) != sorted(target):
                return f"dagger is not a bijection A({ell},{m})_0 -> A({m},{ell})_0"
            for lam, mu in zip(source, images):
                if levelrank.dagger(mu, ell) != lam:
                    return f"dagger is not involutive at {lam}"


def check_dominant_weights(params, order):
    for ell in range(1, 5):
        for m in range(1, 5):
            if levelrank.dominant_lifts(ell, m) != levelrank.gamma_hat_image(ell, m):
                return f"dominant lifted weights differ from γ̂(A({ell},{m})_0)"


def check_extremal(params, order):
    for ell in (2, 3, 4):
        for beta in levelrank.lattice_window(ell, -2, 2):
            for i in range(3):
                mu = levelrank.translate_vacuum(beta, i)
                if (mu.pairing(mu) == 0) != (i == 0):
                    return f"extremal criterion fails for β={beta.omega}, i={i}"
            if levelrank.translate_vacuum(beta) != levelrank.xi_action(beta, AffineWeight.fundamental(0, ell)):
                return f"ξ_β(ω_0) differs from the vacuum translate for β={beta.omega}"


def check_cores(params, order):
    for ell in sorted({2, 3, params.ell} - {1}):
        for core in cores(max(10, params.bound), ell):
            s = levelrank.tau_core_to_charge(core, ell)
            if sum(s) != 0 or levelrank.charge_to_core(s) != core:
                return f"core/charge round trip fails at {format_partition(core)}, ℓ={ell}"
            if levelrank.zero_nodes(core, ell) != levelrank.half_square_norm(s):
                return f"0-node count of {format_partition(core)} differs from ½Σs², ℓ={ell}"


def check_case1(params, order):
    p = params
    if any(p.charge):
        return None
    # the right side lives on partitions of nℓ, so keep nℓ small
    for n in range(min(p.bound, 15 // p.ell) + 1):
        table = grading.graded_dims(n, p)
        for j in range(n + 1):
            if levelrank.rhs_case1_dim(n, j, p.m, p.ell) != table.column_sum(j):
                return f"trivial-charge Casimir count differs at n={n}, j={j}"


CHECKS: list[tuple[str, Callable]] = [
    ("partitions.conjugation", check_conjugation),
    ("partitions.core_quotient", check_core_quotient),
    ("partitions.residue_counts", check_residue_counts),
    ("symfunc.basis_change", check_basis_change),
    ("symfunc.power_sum_adjoint", check_power_sum_adjoint),
    ("symfunc.plethysm_multiplicative", check_plethysm_multiplicative),
    ("symfunc.induced_pairing", check_induced_pairing),
    ("fock.chevalley", check_chevalley),
    ("fock.heisenberg", check_heisenberg),
    ("fock.casimir", check_casimir),
    ("fock.weights", check_weights),
    ("fock.level1_casimir", check_level1_casimir),
    ("grading.casimir_commutes", check_casimir_commutes),
    ("grading.tables", check_graded_tables),
    ("grading.dual_route", check_dual_route),
    ("grading.filtration", check_filtration),
    ("grading.depth_decomposition", check_depth_decomposition),
    ("grading.generating_function", check_generating_function),
    ("crystal.hw_count", check_crystal_hw_count),
    ("crystal.depth_census", check_crystal_depth),
    ("crystal.inverse", check_crystal_inverse),
    ("levelrank.pairing", check_pairing_table),
    ("levelrank.translations", check_translations),
    ("levelrank.gamma", check_gamma),
    ("levelrank.dagger", check_dagger),
    ("levelrank.dominant_weights", check_dominant_weights),
    ("levelrank.extremal", check_extremal),
    ("levelrank.cores", check_cores),
    ("levelrank.case1", check_case1),
]


def run_checks(params: FockSpaceParams, order: str = crystal.CONTENT_FIRST, stop_on_failure: bool = True):
    results = []
    for name, fn in CHECKS:
        try:
            detail = fn(params, order)
        except InvariantError as exc:
            detail = str(exc)
        result = CheckResult(name, detail is None, detail or "")
        results.append(result)
        if not result.ok and stop_on_failure:
            break
    return results
