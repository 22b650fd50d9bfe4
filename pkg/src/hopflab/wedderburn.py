"""Wedderburn decomposition of the semisimple algebra underlying H.

Center, central primitive idempotents (random-central-element splitting with
polynomial factorization), block dimensions, irreducible characters, Schur
elements, and the full set of identities tying them to the integrals.
"""

from __future__ import annotations

import math
import random

from . import linalg
from .hopf import HopfAlgebra, HopfError
from .integrals import IntegralData, NotSemisimple
from .report import CheckReport


class FieldTooSmall(HopfError):
    """The center has a block whose residue field is a proper extension;
    carries the degree needed so the caller can enlarge GF(p^k) and rerun."""

    def __init__(self, degree: int, message: str = ""):
        self.degree = degree
        super().__init__(message or f"center block needs a degree-{degree} field extension")


class NonSquareBlock(HopfError):
    pass


class DimensionNotInvertible(HopfError):
    pass


class InconsistentSchur(HopfError):
    pass


_SPLIT_RETRIES = 24


def center(H: HopfAlgebra) -> list:
    """Basis of Z(H) = {z : zb = bz for all b}, from the stacked commutator system."""
    F = H.field
    n = H.n
    rows = []
    for i in range(n):
        for k in range(n):
            # coefficient of b_k in z·b_i − b_i·z, as a function of z_j
            rows.append([F.sub(H.mult[j][i][k], H.mult[i][j][k]) for j in range(n)])
    return linalg.kernel_basis(F, rows)


def _restricted_mult_matrix(H: HopfAlgebra, z, block_basis):
    """Matrix of multiplication by z on span(block_basis), in that basis."""
    F = H.field
    cols = linalg.transpose(block_basis)  # basis vectors as columns
    images = linalg.transpose([H._mul(z, b) for b in block_basis])
    X = linalg.solve_matrix(F, cols, images)
    if X is None:
        raise HopfError("center block is not closed under multiplication")
    return X


def _poly_at(H: HopfAlgebra, f, z, e):
    """Evaluate a polynomial at z inside the unital block eHe (Horner)."""
    F = H.field
    acc = [0] * H.n
    for c in reversed(f):
        acc = H._mul(acc, z)
        if c:
            for t in range(H.n):
                if e[t]:
                    acc[t] = F.add(acc[t], F.mul(c, e[t]))
    return acc


def _subspace_basis(F, vectors):
    R, pivots = linalg.rref(F, vectors)
    return [R[r] for r in range(len(pivots))]


def central_primitive_idempotents(H: HopfAlgebra, rng=None) -> list:
    """Complete set of central primitive idempotents, deterministically sorted.

    Splits the commutative semisimple center by factoring minimal polynomials
    of random central elements; a persistent irreducible factor of degree > 1
    means the ground field is too small and surfaces as FieldTooSmall.
    """
    F = H.field
    rng = rng or random.Random(0)
    Z = center(H)
    out = []
    stack = [(list(H.unit), Z)]
    while stack:
        e, block = stack.pop()
        if len(block) == 1:
            out.append(e)
            continue
        split = None
        worst_degree = 1
        for _ in range(_SPLIT_RETRIES):
            z = [0] * H.n
            for b in block:
                c = F.random(rng)
                if c:
                    for t in range(H.n):
                        if b[t]:
                            z[t] = F.add(z[t], F.mul(c, b[t]))
            M = _restricted_mult_matrix(H, z, block)
            mp = linalg.min_poly(F, M)
            factors = linalg.poly_factor(F, mp, rng)
            if any(m > 1 for _, m in factors):
                raise NotSemisimple("center has nilpotents: minimal polynomial not squarefree")
            if len(factors) == 1:
                d = linalg.poly_deg(factors[0][0])
                worst_degree = max(worst_degree, d)
                if d == len(block):
                    raise FieldTooSmall(d)
                continue  # unlucky z; try again
            split = (z, mp, [f for f, _ in factors])
            break
        if split is None:
            if worst_degree > 1:
                raise FieldTooSmall(worst_degree)
            raise HopfError("failed to split a center block; structure constants corrupt?")
        z, mp, parts = split
        for f in parts:
            g = linalg.poly_div(F, mp, f)
            h = linalg.poly_invmod(F, g, f)
            ei = _poly_at(H, linalg.poly_mul(F, g, h), z, e)
            sub = _subspace_basis(F, [H._mul(ei, b) for b in block])
            stack.append((ei, sub))
    out.sort()
    _check_idempotent_family(H, out)
    return out


def _check_idempotent_family(H: HopfAlgebra, idempotents):
    F = H.field
    total = [0] * H.n
    for i, e in enumerate(idempotents):
        for t in range(H.n):
            total[t] = F.add(total[t], e[t])
        for j, f in enumerate(idempotents):
            prod = H._mul(e, f)
            want = e if i == j else [0] * H.n
            if prod != want:
                raise HopfError(f"idempotents {i},{j} not orthogonal/idempotent")
        Le = H.left_mult_matrix(e)
        Re = H.right_mult_matrix(e)
        if Le != Re:
            raise HopfError(f"idempotent {i} is not central")
    if total != list(H.unit):
        raise HopfError("idempotents do not sum to 1")


def block_dimension(H: HopfAlgebra, e) -> int:
    r = linalg.rank(H.field, H.left_mult_matrix(e))
    d = math.isqrt(r)
    if d * d != r:
        raise NonSquareBlock(f"block rank {r} is not a perfect square; field too small?")
    return d


def regular_character(H: HopfAlgebra) -> list:
    """χ_H(b_m) = tr(L_{b_m}), read directly off the structure tensor."""
    F = H.field
    out = []
    for m in range(H.n):
        acc = 0
        for l in range(H.n):
            acc = F.add(acc, H.mult[m][l][l])
        out.append(acc)
    return out


def irreducible_characters(H: HopfAlgebra, idempotents, dims) -> list:
    """χ_i(a) = tr(L_{a·e_i}) / d_i; checked against χ_i(e_j) = δ_ij·d_i."""
    F = H.field
    chars = []
    for e, d in zip(idempotents, dims):
        dd = F.from_int(d)
        if dd == 0:
            raise DimensionNotInvertible(f"block dimension {d} vanishes mod p = {F.p}")
        inv_d = F.inv(dd)
        Re = H.right_mult_matrix(e)  # column i = b_i·e
        chi = []
        for i in range(H.n):
            col = [Re[t][i] for t in range(H.n)]
            chi.append(F.mul(inv_d, linalg.mat_trace(F, H.left_mult_matrix(col))))
        chars.append(chi)
    for i, chi in enumerate(chars):
        for j, e in enumerate(idempotents):
            want = F.from_int(dims[i]) if i == j else 0
            if linalg.dot(F, chi, e) != want:
                raise HopfError(f"χ_{i}(e_{j}) has the wrong value")
    chi_H = regular_character(H)
    acc = [0] * H.n
    for chi, d in zip(chars, dims):
        dd = F.from_int(d)
        for t in range(H.n):
            acc[t] = F.add(acc[t], F.mul(dd, chi[t]))
    if acc != chi_H:
        raise HopfError("Σ d_i·χ_i does not reproduce the regular character")
    return chars


def schur_elements(H: HopfAlgebra, characters, data: IntegralData) -> list:
    """Solve λ↼u = Σ (1/c_i)·χ_i for the Schur elements c_i.

    With u = S(Λ₍₂₎)Λ₍₁₎ the solution must be c_i = 1/d_i; that cross-check
    lives in verify_wedderburn_identities.
    """
    F = H.field
    rhs = [data.eval_dual(H._mul(data.u, H.basis(j).coeffs)) for j in range(H.n)]
    A = linalg.transpose(characters)  # n rows, one column per character
    x = linalg.try_solve(F, A, rhs)
    if x is None:
        raise InconsistentSchur("λ↼u is not a combination of the irreducible characters")
    if any(c == 0 for c in x):
        raise InconsistentSchur("vanishing coefficient: Schur element would be infinite")
    return [F.inv(c) for c in x]


class WedderburnData:
    def __init__(self, algebra, idempotents, dims, characters, schur, lambda_of_e, chi_H, dual_perm):
        self.algebra = algebra
        self.idempotents = idempotents
        self.dims = dims
        self.characters = characters
        self.schur = schur
        self.lambda_of_e = lambda_of_e
        self.regular_character = chi_H
        self.dual_perm = dual_perm  # i ↦ i* with S(e_i) = e_{i*}

    @property
    def count(self) -> int:
        return len(self.idempotents)

    def __repr__(self):
        return f"WedderburnData(dims {self.dims})"


def wedderburn_data(H: HopfAlgebra, data: IntegralData, rng=None) -> WedderburnData:
    idempotents = central_primitive_idempotents(H, rng)
    dims = [block_dimension(H, e) for e in idempotents]
    if sum(d * d for d in dims) != H.n:
        raise HopfError(f"Σd² = {sum(d * d for d in dims)} ≠ dim {H.n}")
    characters = irreducible_characters(H, idempotents, dims)
    schur = schur_elements(H, characters, data)
    lam_e = [data.eval_dual(e) for e in idempotents]
    chi_H = regular_character(H)
    dual_perm = []
    for i, e in enumerate(idempotents):
        se = H._apply_S(e)
        try:
            dual_perm.append(idempotents.index(se))
        except ValueError:
            raise HopfError(f"S(e_{i}) is not a central primitive idempotent") from None
    return WedderburnData(H, idempotents, dims, characters, schur, lam_e, chi_H, dual_perm)


def wedderburn_with_extension(H: HopfAlgebra, data: IntegralData, rng=None, max_extensions: int = 1):
    """Run the decomposition, enlarging the field on FieldTooSmall.

    Returns (H', data', wd) where H' is H with scalars extended as needed
    (H' is H itself when no extension was required).
    """
    from .integrals import integral_data
    from .ff import Field

    attempts = 0
    cur_H, cur_data = H, data
    while True:
        try:
            return cur_H, cur_data, wedderburn_data(cur_H, cur_data, rng)
        except FieldTooSmall as exc:
            if attempts >= max_extensions:
                raise
            attempts += 1
            F = cur_H.field
            target = Field(F.p, F.k * exc.degree)
            cur_H = cur_H.extend_scalars(target)
            cur_data = integral_data(cur_H)


# ---------------------------------------------------------------------------
# identity suite


def verify_wedderburn_identities(H: HopfAlgebra, wd: WedderburnData, data: IntegralData) -> CheckReport:
    """The idempotent/character/integral identities of the decomposition."""
    F = H.field
    n = H.n
    rep = CheckReport("wedderburn identities")
    delta = H._delta(data.lambda_H, 2)
    basis = [[F.one if t == i else 0 for t in range(n)] for i in range(n)]
    s_basis = [H._apply_S(b) for b in basis]
    u_inv_s = [H._mul(data.u_inv, s) for s in s_basis]  # u⁻¹S(b_k)

    # Σ d_i·c_i·e_i = 1  (the unit relation behind u = S(Λ₍₂₎)Λ₍₁₎)
    acc = [0] * n
    for d, c, e in zip(wd.dims, wd.schur, wd.idempotents):
        w = F.mul(F.from_int(d), c)
        for t in range(n):
            if e[t]:
                acc[t] = F.add(acc[t], F.mul(w, e[t]))
    rep.add("Σ dᵢcᵢeᵢ = 1", acc == list(H.unit))
    rep.add("cᵢ = 1/dᵢ", all(c == F.inv(F.from_int(d)) for c, d in zip(wd.schur, wd.dims)))

    # u = χ_H(Λ₍₁₎)S(Λ₍₂₎)
    acc = [0] * n
    for (j, k), c in delta.items():
        w = F.mul(c, wd.regular_character[j])
        if w:
            for t in range(n):
                if s_basis[k][t]:
                    acc[t] = F.add(acc[t], F.mul(w, s_basis[k][t]))
    rep.add("u = χ_H(Λ₍₁₎)S(Λ₍₂₎)", acc == data.u)

    # λ(eᵢ) = dᵢ·χᵢ(u⁻¹)
    ok = all(
        lam_e == F.mul(F.from_int(d), linalg.dot(F, chi, data.u_inv))
        for lam_e, d, chi in zip(wd.lambda_of_e, wd.dims, wd.characters)
    )
    rep.add("λ(eᵢ) = dᵢχᵢ(u⁻¹)", ok)

    # uS(u) = S(u)u = ε(Λ)·Σ (dᵢ²/λ(eᵢ))·eᵢ
    su = H._apply_S(data.u)
    us = H._mul(data.u, su)
    rep.add("uS(u) = S(u)u", us == H._mul(su, data.u))
    acc = [0] * n
    ok = True
    for d, lam_e, e in zip(wd.dims, wd.lambda_of_e, wd.idempotents):
        if lam_e == 0:
            ok = False
            break
        w = F.mul(data.eps_of_lambda, F.div(F.mul(F.from_int(d), F.from_int(d)), lam_e))
        for t in range(n):
            if e[t]:
                acc[t] = F.add(acc[t], F.mul(w, e[t]))
    rep.add("uS(u) = ε(Λ)Σ(dᵢ²/λ(eᵢ))eᵢ", ok and us == acc)

    # λ(eᵢ) = λ(S(eᵢ)) and the dual permutation structure
    rep.add(
        "λ(eᵢ) = λ(S(eᵢ))",
        all(
            wd.lambda_of_e[i] == data.eval_dual(H._apply_S(wd.idempotents[i]))
            for i in range(wd.count)
        ),
    )
    perm = wd.dual_perm
    rep.add("i ↦ i* is an involution", all(perm[perm[i]] == i for i in range(wd.count)))
    ok = True
    for i in range(wd.count):
        chi_s = [linalg.dot(F, wd.characters[i], s_basis[j]) for j in range(n)]
        if chi_s != wd.characters[perm[i]]:
            ok = False
            break
    rep.add("χᵢ∘S = χᵢ*", ok)

    # eᵢ = dᵢχᵢ(Λ₍₁₎)u⁻¹S(Λ₍₂₎) = dᵢχᵢ(u⁻¹S(Λ₍₂₎))Λ₍₁₎
    ok1 = ok2 = True
    for i in range(wd.count):
        d = F.from_int(wd.dims[i])
        chi = wd.characters[i]
        first = [0] * n
        second = [0] * n
        for (j, k), c in delta.items():
            w = F.mul(c, chi[j])
            if w:
                for t in range(n):
                    if u_inv_s[k][t]:
                        first[t] = F.add(first[t], F.mul(w, u_inv_s[k][t]))
            w2 = F.mul(c, linalg.dot(F, chi, u_inv_s[k]))
            if w2:
                second[j] = F.add(second[j], w2)
        if [F.mul(d, x) for x in first] != wd.idempotents[i]:
            ok1 = False
        if [F.mul(d, x) for x in second] != wd.idempotents[i]:
            ok2 = False
    rep.add("eᵢ = dᵢχᵢ(Λ₍₁₎)u⁻¹S(Λ₍₂₎)", ok1)
    rep.add("eᵢ = dᵢχᵢ(u⁻¹S(Λ₍₂₎))Λ₍₁₎", ok2)

    # λ↼u = u⇀λ = χ_H
    ok = True
    for j in range(n):
        left = data.eval_dual(H._mul(data.u, basis[j]))   # (λ↼u)(b_j) = λ(u·b_j)
        right = data.eval_dual(H._mul(basis[j], data.u))  # (u⇀λ)(b_j) = λ(b_j·u)
        if left != wd.regular_character[j] or right != wd.regular_character[j]:
            ok = False
            break
    rep.add("λ↼u = u⇀λ = χ_H", ok)

    rep.add("p > dᵢ for all blocks", all(F.p > d for d in wd.dims))
    return rep


def schur_endomorphism_check(V, data: IntegralData, c_expected) -> bool:
    """On an explicit simple module: I(φ)(v) = Λ₍₁₎φ(u⁻¹S(Λ₍₂₎)v) = c·tr(φ)·id
    for every elementary matrix φ."""
    H = V.algebra
    F = H.field
    d = V.dim
    delta = H._delta(data.lambda_H, 2)
    basis_mats = {}
    for (j, k), c in delta.items():
        pre = V.act(H._mul(data.u_inv, H._apply_S([F.one if t == k else 0 for t in range(H.n)])))
        post = V.act([F.one if t == j else 0 for t in range(H.n)])
        basis_mats[(j, k)] = (c, post, pre)
    for r in range(d):
        for s in range(d):
            phi = [[F.one if (a, b) == (r, s) else 0 for b in range(d)] for a in range(d)]
            acc = [[0] * d for _ in range(d)]
            for (j, k), (c, post, pre) in basis_mats.items():
                M = linalg.mat_mul(F, post, linalg.mat_mul(F, phi, pre))
                for a in range(d):
                    for b in range(d):
                        if M[a][b]:
                            acc[a][b] = F.add(acc[a][b], F.mul(c, M[a][b]))
            tr_phi = F.one if r == s else 0
            want = [
                [F.mul(c_expected, tr_phi) if a == b else 0 for b in range(d)] for a in range(d)
            ]
            if acc != want:
                return False
    return True
