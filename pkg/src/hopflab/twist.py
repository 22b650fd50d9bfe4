"""Twisting the comultiplication by an invertible 2-cocycle J ∈ H⊗H.

H^J keeps the algebra structure and acquires Δ^J = J⁻¹ΔJ and
S^J = Q⁻¹S(·)Q with Q = S(J⁽¹⁾)J⁽²⁾.  The indicator table, read as a
multiset over simples, is unchanged by this — `gauge_invariance_check`
verifies exactly that.
"""

from __future__ import annotations

from . import linalg
from .hopf import HopfAlgebra, HopfError, TensorElement
from .integrals import IntegralData, integral_data
from .report import CheckReport


class NotInvertible(HopfError):
    pass


class NormalizationFails(HopfError):
    pass


class CocycleFails(HopfError):
    pass


class Twist:
    def __init__(self, algebra: HopfAlgebra, J: TensorElement, J_inv: TensorElement | None = None):
        if J.order != 2:
            raise ValueError("a twist lives in H⊗H")
        self.algebra = algebra
        self.J = J
        self.J_inv = J_inv if J_inv is not None else _invert_tensor(algebra, J)
        self._q = None
        self._q_inv = None

    def q_element(self):
        """Q = S(J⁽¹⁾)·J⁽²⁾."""
        if self._q is None:
            self._q = _fold_pairs(self.algebra, self.J, s_on_first=True)
        return self._q

    def q_inverse(self):
        """Q⁻¹ = J⁻⁽¹⁾·S(J⁻⁽²⁾); checked against Q on first use."""
        if self._q_inv is None:
            H = self.algebra
            qi = _fold_pairs(H, self.J_inv, s_on_first=False)
            q = self.q_element()
            if H._mul(q, qi) != list(H.unit) or H._mul(qi, q) != list(H.unit):
                raise NotInvertible("J⁻⁽¹⁾S(J⁻⁽²⁾) is not inverse to S(J⁽¹⁾)J⁽²⁾")
            self._q_inv = qi
        return self._q_inv


def _fold_pairs(H: HopfAlgebra, t: TensorElement, s_on_first: bool):
    F = H.field
    acc = [0] * H.n
    for (x, y), c in t.data.items():
        bx = [F.one if i == x else 0 for i in range(H.n)]
        by = [F.one if i == y else 0 for i in range(H.n)]
        term = H._mul(H._apply_S(bx), by) if s_on_first else H._mul(bx, H._apply_S(by))
        for i in range(H.n):
            if term[i]:
                acc[i] = F.add(acc[i], F.mul(c, term[i]))
    return acc


def _invert_tensor(H: HopfAlgebra, J: TensorElement) -> TensorElement:
    """Two-sided inverse of J in the algebra H⊗H, by linear solve."""
    F = H.field
    n = H.n
    dim = n * n
    M = [[0] * dim for _ in range(dim)]
    for (x, y), c in J.data.items():
        for a in range(n):
            for p, cp in H._mult_rows[x][a]:
                w = F.mul(c, cp)
                for b in range(n):
                    col = a * n + b
                    for q, cq in H._mult_rows[y][b]:
                        M[p * n + q][col] = F.add(M[p * n + q][col], F.mul(w, cq))
    one = [0] * dim
    for a in range(n):
        if H.unit[a]:
            for b in range(n):
                if H.unit[b]:
                    one[a * n + b] = F.mul(H.unit[a], H.unit[b])
    x = linalg.try_solve(F, M, one)
    if x is None:
        raise NotInvertible("J has no right inverse in H⊗H")
    data = {(i // n, i % n): v for i, v in enumerate(x) if v}
    J_inv = TensorElement(H, 2, data)
    if J_inv.mul(J) != _unit_tensor(H, 2):
        raise NotInvertible("right inverse of J is not two-sided")
    return J_inv


def _unit_tensor(H: HopfAlgebra, order: int) -> TensorElement:
    return TensorElement.pure(H, *[list(H.unit)] * order)


def _pad_with_unit(H: HopfAlgebra, t: TensorElement, side: str) -> TensorElement:
    """t⊗1 (side='right') or 1⊗t (side='left') as an order-3 tensor."""
    F = H.field
    data = {}
    for key, c in t.data.items():
        for a in range(H.n):
            if H.unit[a]:
                new = key + (a,) if side == "right" else (a,) + key
                data[new] = F.mul(c, H.unit[a])
    return TensorElement(H, 3, data)


def twist_validate(tw: Twist, strict: bool = True) -> CheckReport:
    """Invertibility, counit normalization, and the 2-cocycle identity."""
    H = tw.algebra
    F = H.field
    rep = CheckReport("twist axioms")
    rep.add("J invertible in H⊗H", True)  # construction of J⁻¹ already proved it

    eps_left = [0] * H.n  # (ε⊗id)(J)
    eps_right = [0] * H.n
    for (x, y), c in tw.J.data.items():
        w = F.mul(c, H.counit[x])
        if w:
            eps_left[y] = F.add(eps_left[y], w)
        w = F.mul(c, H.counit[y])
        if w:
            eps_right[x] = F.add(eps_right[x], w)
    ok_l = eps_left == list(H.unit)
    ok_r = eps_right == list(H.unit)
    rep.add("(ε⊗id)(J) = 1", ok_l)
    rep.add("(id⊗ε)(J) = 1", ok_r)
    if strict and not (ok_l and ok_r):
        side = "(ε⊗id)" if not ok_l else "(id⊗ε)"
        raise NormalizationFails(f"{side}(J) != 1")

    lhs = tw.J.expand_leg(0).mul(_pad_with_unit(H, tw.J, "right"))
    rhs = tw.J.expand_leg(1).mul(_pad_with_unit(H, tw.J, "left"))
    ok_c = lhs == rhs
    rep.add("(Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J)", ok_c)
    if strict and not ok_c:
        diff = lhs.sub(rhs)
        key = sorted(diff.data)[0]
        raise CocycleFails(f"cocycle identity fails, first mismatch at basis key {key}")
    return rep


def twist_hopf(H: HopfAlgebra, tw: Twist) -> HopfAlgebra:
    """H^J: same products, Δ^J = J⁻¹ΔJ, S^J = Q⁻¹S(·)Q, axioms re-verified."""
    F = H.field
    n = H.n
    comult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        di = TensorElement(H, 2, {(j, k): c for j, k, c in H._comult_rows[i]})
        twisted = tw.J_inv.mul(di).mul(tw.J)
        for (j, k), c in twisted.data.items():
            comult[i][j][k] = c
    q = tw.q_element()
    q_inv = tw.q_inverse()
    antipode = []
    for i in range(n):
        s_bi = H._apply_S([F.one if t == i else 0 for t in range(n)])
        antipode.append(H._mul(H._mul(q_inv, s_bi), q))
    HJ = HopfAlgebra(
        F,
        H.mult,
        comult,
        list(H.unit),
        list(H.counit),
        antipode,
        name=f"{H.name}^J" if H.name else "twisted",
    )
    rep = HJ.verify_axioms()
    if not rep.ok:
        raise HopfError("twisted structure breaks the axioms: " + "; ".join(e.name for e in rep.failures()))
    return HJ


def twisted_u_check(
    H: HopfAlgebra, tw: Twist, data: IntegralData, HJ: HopfAlgebra, data_J: IntegralData
) -> CheckReport:
    """u^J = Q⁻¹S(Q)u, and the matching coproduct shift Δ^J(Λ) = Q⁻¹Λ₍₁₎⊗Λ₍₂₎Q."""
    F = H.field
    rep = CheckReport("twisted unit element")
    rep.add("twist preserves Λ", data_J.lambda_H == data.lambda_H)
    q = tw.q_element()
    q_inv = tw.q_inverse()
    predicted = H._mul(H._mul(q_inv, H._apply_S(q)), data.u)
    rep.add("u^J = Q⁻¹S(Q)u", data_J.u == predicted)
    delta = TensorElement(H, 2, H._delta(data.lambda_H, 2))
    delta_J = TensorElement(HJ, 2, HJ._delta(data_J.lambda_H, 2))
    shifted = delta.mul_left_on_leg(0, q_inv).mul_right_on_leg(1, q)
    # delta_J is a tensor over H^J, shifted over H; same coefficients wanted
    rep.add("Δ^J(Λ) = Q⁻¹Λ₍₁₎⊗Λ₍₂₎Q", delta_J.data == shifted.data)
    return rep


def gauge_invariance_check(H: HopfAlgebra, tw: Twist, n_values, rng=None):
    """Full pipeline on H and H^J; equality of dimension and indicator multisets.

    Returns (report, table, twisted_table).
    """
    from .indicators import indicator_table
    from .wedderburn import wedderburn_data

    rep = CheckReport(f"gauge invariance{' of ' + H.name if H.name else ''}")
    rep.extend(twist_validate(tw))
    HJ = twist_hopf(H, tw)
    rep.add("H^J satisfies the Hopf axioms", True)  # twist_hopf would have raised
    data = integral_data(H)
    data_J = integral_data(HJ)
    rep.extend(twisted_u_check(H, tw, data, HJ, data_J))
    wd = wedderburn_data(H, data, rng)
    wd_J = wedderburn_data(HJ, data_J, rng)
    rep.add("dimension multisets agree", sorted(wd.dims) == sorted(wd_J.dims))
    table = indicator_table(H, data, wd, n_values)
    table_J = indicator_table(HJ, data_J, wd_J, n_values)
    rep.add("indicator multisets agree", table.fingerprint() == table_J.fingerprint())
    return rep, table, table_J
