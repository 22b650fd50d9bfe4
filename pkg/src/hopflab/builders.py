"""Constructors for the example families: group algebras, their duals,
Drinfeld doubles, and bicharacter twists.
"""

from __future__ import annotations

from .ff import Field
from .groups import GroupTable
from .hopf import HopfAlgebra, HopfError, TensorElement


class CharacteristicDividesOrder(HopfError):
    pass


class PreconditionPSquare(HopfError):
    pass


def _check_pre(G: GroupTable, F: Field, dim: int, check: bool):
    if not check:
        return
    if G.order % F.p == 0:
        raise CharacteristicDividesOrder(
            f"|{G.label}| = {G.order} divisible by p = {F.p}: not semisimple"
        )
    if F.p * F.p <= dim:
        raise PreconditionPSquare(f"need p^2 > dim: p = {F.p}, dim = {dim}")


def group_algebra(G: GroupTable, F: Field, check: bool = True) -> HopfAlgebra:
    """kG: basis the group elements, Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹."""
    _check_pre(G, F, G.order, check)
    m = G.order
    one = F.one
    mult = [[[one if k == G.cayley[i][j] else 0 for k in range(m)] for j in range(m)] for i in range(m)]
    comult = [[[one if j == i and k == i else 0 for k in range(m)] for j in range(m)] for i in range(m)]
    unit = [one if i == G.identity else 0 for i in range(m)]
    counit = [one] * m
    antipode = [[one if j == G.inverse[i] else 0 for j in range(m)] for i in range(m)]
    return HopfAlgebra(F, mult, comult, unit, counit, antipode, name=f"k[{G.label}]")


def dual_group_algebra(G: GroupTable, F: Field, check: bool = True) -> HopfAlgebra:
    """k^G: basis the delta functions, δ_g δ_h = [g=h] δ_g, Δ(δ_g) = Σ_{xy=g} δ_x⊗δ_y."""
    _check_pre(G, F, G.order, check)
    m = G.order
    one = F.one
    mult = [[[one if i == j == k else 0 for k in range(m)] for j in range(m)] for i in range(m)]
    comult = [
        [[one if G.cayley[j][k] == i else 0 for k in range(m)] for j in range(m)]
        for i in range(m)
    ]
    unit = [one] * m
    counit = [one if i == G.identity else 0 for i in range(m)]
    antipode = [[one if j == G.inverse[i] else 0 for j in range(m)] for i in range(m)]
    return HopfAlgebra(F, mult, comult, unit, counit, antipode, name=f"k^[{G.label}]")


def drinfeld_double(G: GroupTable, F: Field, check: bool = True) -> HopfAlgebra:
    """D(G) on basis δ_g ⊗ h (index g·|G| + h):

    (δ_g⊗h)(δ_{g'}⊗h') = [g = hg'h⁻¹] δ_g⊗hh'
    Δ(δ_g⊗h) = Σ_{xy=g} (δ_x⊗h) ⊗ (δ_y⊗h)
    ε(δ_g⊗h) = [g = e],  S(δ_g⊗h) = δ_{h⁻¹g⁻¹h} ⊗ h⁻¹
    """
    m = G.order
    n = m * m
    _check_pre(G, F, n, check)
    one = F.one
    idx = lambda g, h: g * m + h
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g in range(m):
        for h in range(m):
            for g2 in range(m):
                for h2 in range(m):
                    if g == G.conjugate(h, g2):
                        mult[idx(g, h)][idx(g2, h2)][idx(g, G.cayley[h][h2])] = one
    comult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g in range(m):
        for h in range(m):
            for x in range(m):
                for y in range(m):
                    if G.cayley[x][y] == g:
                        comult[idx(g, h)][idx(x, h)][idx(y, h)] = one
    unit = [0] * n
    for g in range(m):
        unit[idx(g, G.identity)] = one
    counit = [one if i // m == G.identity else 0 for i in range(n)]
    antipode = [[0] * n for _ in range(n)]
    for g in range(m):
        for h in range(m):
            hinv = G.inverse[h]
            target = G.conjugate(hinv, G.inverse[g])
            antipode[idx(g, h)][idx(target, hinv)] = one
    names = [f"(d{G.names[i // m]},{G.names[i % m]})" for i in range(n)]
    H = HopfAlgebra(F, mult, comult, unit, counit, antipode, name=f"D({G.label})")
    H.basis_names = names
    return H


# ---------------------------------------------------------------------------
# twists


def dual_bicharacter_twist(H: HopfAlgebra, G: GroupTable, beta) -> TensorElement:
    """J = Σ_{x,y} β(x,y) δ_x⊗δ_y on the dual group algebra k^G.

    β must be a normalized 2-cocycle of G valued in F*; for abelian G any
    bicharacter qualifies.  The cocycle identity is re-verified downstream.
    """
    if H.n != G.order:
        raise HopfError("algebra dimension does not match the group order")
    data = {
        (x, y): beta[x][y] for x in range(G.order) for y in range(G.order) if beta[x][y]
    }
    return TensorElement(H, 2, data)


def subgroup_bicharacter_twist(
    H: HopfAlgebra, G: GroupTable, subgroup: list, chars, beta
) -> TensorElement:
    """Twist of a group algebra kG supported on an abelian subgroup A.

    ``subgroup`` lists the element indices of A; ``chars[t]`` is the value
    table of the t-th character of A (aligned with ``subgroup``); ``beta`` is
    a bicharacter matrix on the character indices.  The twist is
    J = Σ_{t,u} β(t,u) E_t ⊗ E_u with E_t the character idempotents of kA.
    """
    F = H.field
    m = len(subgroup)
    if F.from_int(m) == 0:
        raise CharacteristicDividesOrder(f"|A| = {m} divisible by p = {F.p}")
    inv_m = F.inv(F.from_int(m))
    pos = {g: a for a, g in enumerate(subgroup)}
    # E_t = (1/|A|) Σ_{a∈A} χ_t(a⁻¹) a
    idem = []
    for t in range(m):
        vec = [0] * H.n
        for g in subgroup:
            ainv_pos = pos[G.inverse[g]]
            vec[g] = F.mul(inv_m, chars[t][ainv_pos])
        idem.append(vec)
    data: dict[tuple, int] = {}
    for t in range(m):
        for u in range(m):
            b = beta[t][u]
            if not b:
                continue
            for x in subgroup:
                cx = idem[t][x]
                if not cx:
                    continue
                for y in subgroup:
                    cy = idem[u][y]
                    if not cy:
                        continue
                    key = (x, y)
                    v = F.add(data.get(key, 0), F.mul(F.mul(b, cx), cy))
                    if v:
                        data[key] = v
                    elif key in data:
                        del data[key]
    return TensorElement(H, 2, data)
