"""Integrals and the conjugating unit.

Computes the two-sided integral Λ of H, the dual integral λ normalized by
λ(Λ) = 1, the unit u = S(Λ₍₂₎)Λ₍₁₎ implementing S² by conjugation, and the
distinguished group-like g = S(u⁻¹)u implementing S⁴ — then verifies the web
of identities tying them together.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .builders import PreconditionPSquare
from .hopf import AlgElement, HopfAlgebra, HopfError, TensorElement
from .report import CheckReport


class IntegralError(HopfError):
    pass


class NoIntegral(IntegralError):
    pass


class IntegralSpaceTooBig(IntegralError):
    pass


class DegeneratePairing(IntegralError):
    pass


class NotSemisimple(IntegralError):
    pass


class SingularU(IntegralError):
    pass


class NotGrouplike(IntegralError):
    pass


class EquivalenceViolation(IntegralError):
    pass


@dataclass
class IntegralData:
    algebra: HopfAlgebra
    lambda_H: list          # Λ, first nonzero coordinate = 1
    lambda_dual: list       # λ as a covector, scaled so λ(Λ) = 1
    u: list
    u_inv: list
    g: list
    g_inv: list
    eps_of_lambda: int      # ε(Λ), the semisimplicity certificate
    dual_convention: str    # "right" or "left": which defining system λ solves

    @property
    def field(self):
        return self.algebra.field

    def eval_dual(self, a) -> int:
        return linalg.dot(self.field, self.lambda_dual, a)


def _one_dim_kernel(H: HopfAlgebra, rows, what: str):
    basis = linalg.kernel_basis(H.field, rows)
    if not basis:
        raise NoIntegral(f"no nonzero {what}: not a Hopf algebra?")
    if len(basis) > 1:
        raise IntegralSpaceTooBig(
            f"{what} space has dimension {len(basis)}; structure constants corrupt"
        )
    v = basis[0]
    lead = next(c for c in v if c)  # normalize: first nonzero coordinate 1
    if lead != H.field.one:
        inv = H.field.inv(lead)
        v = [H.field.mul(inv, c) for c in v]
    return v


def compute_integral(H: HopfAlgebra) -> AlgElement:
    """Λ with b_i·Λ = ε(b_i)·Λ for all i, from the stacked kernel system."""
    F = H.field
    n = H.n
    rows = []
    for i in range(n):
        L = H.left_mult_matrix(H.basis(i))
        e = H.counit[i]
        for r in range(n):
            row = list(L[r])
            row[r] = F.sub(row[r], e)
            rows.append(row)
    return AlgElement(H, _one_dim_kernel(H, rows, "integral"))


def compute_dual_integral(H: HopfAlgebra, convention: str = "right") -> list:
    """λ with a₍₁₎λ(a₍₂₎) = λ(a)1 (or the mirrored condition for "left")."""
    F = H.field
    n = H.n
    rows = []
    for i in range(n):
        for l in range(n):
            if convention == "right":
                row = [H.comult[i][l][k] for k in range(n)]
            else:
                row = [H.comult[i][j][l] for j in range(n)]
            row[i] = F.sub(row[i], H.unit[l])
            rows.append(row)
    return _one_dim_kernel(H, rows, "dual integral")


def normalize_pair(H: HopfAlgebra, lam: AlgElement, lam_dual: list) -> list:
    """Rescale λ so that λ(Λ) = 1; Λ is left untouched."""
    F = H.field
    pairing = linalg.dot(F, lam_dual, lam.coeffs)
    if pairing == 0:
        raise DegeneratePairing("λ(Λ) = 0: integrals do not pair")
    inv = F.inv(pairing)
    return [F.mul(inv, c) for c in lam_dual]


def _dual_basis_identity_holds(H: HopfAlgebra, lam_coeffs, lam_dual) -> bool:
    # a = λ(a·Λ₍₁₎)·S(Λ₍₂₎) on every basis element: the convention anchor
    F = H.field
    delta = H._delta(lam_coeffs, 2)
    s_img = {}
    for i in range(H.n):
        out = [0] * H.n
        for (j, k), c in delta.items():
            lam_val = 0  # λ(b_i·b_j) off the sparse mult row
            for t, ct in H._mult_rows[i][j]:
                lam_val = F.add(lam_val, F.mul(ct, lam_dual[t]))
            if not lam_val:
                continue
            c2 = F.mul(c, lam_val)
            if k not in s_img:
                s_img[k] = H._apply_S([F.one if t == k else 0 for t in range(H.n)])
            sk = s_img[k]
            for t in range(H.n):
                if sk[t]:
                    out[t] = F.add(out[t], F.mul(c2, sk[t]))
        if out != [F.one if t == i else 0 for t in range(H.n)]:
            return False
    return True


def compute_u(H: HopfAlgebra, lam: AlgElement):
    """u = S(Λ₍₂₎)Λ₍₁₎ and its inverse; verifies S²(h) = u·h·u⁻¹."""
    F = H.field
    n = H.n
    u = [0] * n
    for (j, k), c in H._delta(lam.coeffs, 2).items():
        sk = H._apply_S([F.one if t == k else 0 for t in range(n)])
        prod = H._mul(sk, [F.one if t == j else 0 for t in range(n)])
        for t in range(n):
            if prod[t]:
                u[t] = F.add(u[t], F.mul(c, prod[t]))
    L = H.left_mult_matrix(u)
    u_inv = linalg.try_solve(F, L, list(H.unit))
    if u_inv is None:
        raise SingularU("u = S(Λ₍₂₎)Λ₍₁₎ is not invertible")
    if H._mul(u_inv, u) != list(H.unit) or H._mul(u, u_inv) != list(H.unit):
        raise SingularU("u has no two-sided inverse")
    s2 = H.s_square_matrix()
    for i in range(n):
        b = [F.one if t == i else 0 for t in range(n)]
        if H._mul(H._mul(u, b), u_inv) != [s2[i][j] for j in range(n)]:
            raise IntegralError(f"S² is not conjugation by u at basis {i}")
    return AlgElement(H, u), AlgElement(H, u_inv)


def distinguished_grouplike(H: HopfAlgebra, u: AlgElement, u_inv: AlgElement):
    """g = S(u⁻¹)·u; checks Δ(g) = g⊗g, ε(g) = 1, S⁴ = conjugation by g."""
    F = H.field
    g = H._mul(H._apply_S(u_inv.coeffs), u.coeffs)
    g_inv = H._mul(u_inv.coeffs, H._apply_S(u.coeffs))
    if H._mul(g, g_inv) != list(H.unit):
        raise NotGrouplike("g·g⁻¹ ≠ 1")
    gg = TensorElement.pure(H, AlgElement(H, g), AlgElement(H, g))
    if TensorElement(H, 2, H._comul(g)) != gg:
        raise NotGrouplike("Δ(g) ≠ g⊗g")
    if H._counit(g) != F.one:
        raise NotGrouplike("ε(g) ≠ 1")
    s2 = H.s_square_matrix()
    s4 = linalg.mat_mul(F, s2, s2)
    for i in range(H.n):
        b = [F.one if t == i else 0 for t in range(H.n)]
        if H._mul(H._mul(g, b), g_inv) != [s4[i][j] for j in range(H.n)]:
            raise NotGrouplike(f"S⁴ is not conjugation by g at basis {i}")
    return AlgElement(H, g), AlgElement(H, g_inv)


def integral_data(H: HopfAlgebra, allow_small_p: bool = False) -> IntegralData:
    """Full pipeline: Λ, λ (convention-anchored), u, u⁻¹, g, certificates."""
    F = H.field
    if not allow_small_p and F.p * F.p <= H.n:
        raise PreconditionPSquare(f"need p² > dim: p = {F.p}, dim = {H.n}")
    lam = compute_integral(H)
    # two-sidedness: Λ must be a right integral too (unimodularity)
    for i in range(H.n):
        rhs = [F.mul(H.counit[i], c) for c in lam.coeffs]
        if H._mul(lam.coeffs, [F.one if t == i else 0 for t in range(H.n)]) != rhs:
            raise NotSemisimple("integral is one-sided: algebra is not unimodular")
    eps_lam = H._counit(lam.coeffs)
    if eps_lam == 0:
        raise NotSemisimple("ε(Λ) = 0: algebra is not semisimple")
    convention = "right"
    lam_dual = normalize_pair(H, lam, compute_dual_integral(H, "right"))
    if not _dual_basis_identity_holds(H, lam.coeffs, lam_dual):
        convention = "left"
        lam_dual = normalize_pair(H, lam, compute_dual_integral(H, "left"))
        if not _dual_basis_identity_holds(H, lam.coeffs, lam_dual):
            raise IntegralError("dual-basis identity fails under both integral conventions")
    u, u_inv = compute_u(H, lam)
    g, g_inv = distinguished_grouplike(H, u, u_inv)
    return IntegralData(
        algebra=H,
        lambda_H=lam.coeffs,
        lambda_dual=lam_dual,
        u=u.coeffs,
        u_inv=u_inv.coeffs,
        g=g.coeffs,
        g_inv=g_inv.coeffs,
        eps_of_lambda=eps_lam,
        dual_convention=convention,
    )


# ---------------------------------------------------------------------------
# identity suites


def verify_frobenius_identities(H: HopfAlgebra, data: IntegralData) -> CheckReport:
    """The dual-basis and symmetry identities linking Λ, λ, S, u."""
    F = H.field
    n = H.n
    rep = CheckReport("integral identities")
    lam = data.lambda_H
    lam_dual = data.lambda_dual
    delta = TensorElement(H, 2, H._delta(lam, 2))
    basis = [[F.one if t == i else 0 for t in range(n)] for i in range(n)]
    s_basis = [H._apply_S(b) for b in basis]

    def lam_of(vec):
        return linalg.dot(F, lam_dual, vec)

    # a = λ(aΛ₍₁₎)S(Λ₍₂₎)
    wit = None
    for i in range(n):
        out = [0] * n
        for (j, k), c in delta.data.items():
            v = lam_of(H._mul(basis[i], basis[j]))
            if v:
                c2 = F.mul(c, v)
                for t in range(n):
                    if s_basis[k][t]:
                        out[t] = F.add(out[t], F.mul(c2, s_basis[k][t]))
        if out != basis[i]:
            wit = f"b{i}"
            break
    rep.add("a = λ(aΛ₍₁₎)S(Λ₍₂₎)", wit is None, wit)

    # a = λ(S(Λ₍₂₎)a)Λ₍₁₎
    wit = None
    for i in range(n):
        out = [0] * n
        for (j, k), c in delta.data.items():
            v = lam_of(H._mul(s_basis[k], basis[i]))
            if v:
                out[j] = F.add(out[j], F.mul(c, v))
        if out != basis[i]:
            wit = f"b{i}"
            break
    rep.add("a = λ(S(Λ₍₂₎)a)Λ₍₁₎", wit is None, wit)

    # λ(ab) = λ(S²(b)a)
    wit = None
    s2 = H.s_square_matrix()
    for i in range(n):
        for j in range(n):
            lhs = lam_of(H._mul(basis[i], basis[j]))
            s2bj = [s2[j][t] for t in range(n)]
            rhs = lam_of(H._mul(s2bj, basis[i]))
            if lhs != rhs:
                wit = f"(b{i}, b{j})"
                break
        if wit:
            break
    rep.add("λ(ab) = λ(S²(b)a)", wit is None, wit)

    # Λ₍₁₎ ⊗ u⁻¹S(Λ₍₂₎)  =  u⁻¹S(Λ₍₂₎) ⊗ Λ₍₁₎
    lhs = delta.antipode_leg(1).mul_left_on_leg(1, data.u_inv)
    rhs = delta.flip().antipode_leg(0).mul_left_on_leg(0, data.u_inv)
    rep.add("Λ₍₁₎⊗u⁻¹S(Λ₍₂₎) symmetric", lhs == rhs)

    # Λ₍₁₎ · u⁻¹S(Λ₍₂₎) = 1
    acc = [0] * n
    for (j, k), c in delta.data.items():
        prod = H._mul(basis[j], H._mul(data.u_inv, s_basis[k]))
        for t in range(n):
            if prod[t]:
                acc[t] = F.add(acc[t], F.mul(c, prod[t]))
    rep.add("Λ₍₁₎·u⁻¹S(Λ₍₂₎) = 1", acc == list(H.unit))

    # Λ₍₂₎ ⊗ Λ₍₁₎ = Λ₍₁₎ ⊗ S²(Λ₍₂₎)g
    lhs = delta.flip()
    rhs = delta.antipode_leg(1).antipode_leg(1).mul_right_on_leg(1, data.g)
    rep.add("Λ₍₂₎⊗Λ₍₁₎ = Λ₍₁₎⊗S²(Λ₍₂₎)g", lhs == rhs)

    # Λ₍₂₎⊗…⊗Λ₍ₘ₎⊗u⁻¹Λ₍₁₎ = Λ₍₁₎⊗…⊗Λ₍ₘ₋₁₎⊗Λ₍ₘ₎S(u⁻¹),  m = 2..4
    s_u_inv = H._apply_S(data.u_inv)
    for m in range(2, 5):
        dm = TensorElement(H, m, H._delta(lam, m))
        lhs = dm.rotate(1).mul_left_on_leg(m - 1, data.u_inv)
        rhs = dm.mul_right_on_leg(m - 1, s_u_inv)
        rep.add(f"leg-rotation identity, {m} legs", lhs == rhs)
    return rep


def cocommutativity_equivalence(H: HopfAlgebra, data: IntegralData) -> CheckReport:
    """Three equivalent statements: Δ(Λ) symmetric ⟺ λ symmetric ⟺ S² = id.

    Raises EquivalenceViolation if the booleans disagree — that would be an
    implementation bug, not a property of the input.
    """
    F = H.field
    rep = CheckReport("cocommutativity equivalence")
    delta = TensorElement(H, 2, H._delta(data.lambda_H, 2))
    a = delta == delta.flip()
    lam_dual = data.lambda_dual
    b = True
    for i in range(H.n):
        for j in range(H.n):
            x = 0
            y = 0
            for t, ct in H._mult_rows[i][j]:
                x = F.add(x, F.mul(ct, lam_dual[t]))
            for t, ct in H._mult_rows[j][i]:
                y = F.add(y, F.mul(ct, lam_dual[t]))
            if x != y:
                b = False
                break
        if not b:
            break
    c = H.is_involutory()
    agree = a == b == c
    witness = f"Δ(Λ) cocommutative: {a}, λ symmetric: {b}, S² = id: {c}"
    rep.add("Δ(Λ) cocommutative ⟺ λ symmetric ⟺ S² = id", agree, None if agree else witness)
    if not agree:
        raise EquivalenceViolation(witness)
    return rep
