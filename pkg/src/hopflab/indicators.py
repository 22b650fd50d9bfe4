"""Higher indicators ν_n(V) = χ_V(u⁻¹·P_n(Λ)), by three routes.

* evaluation of the character at u⁻¹ times a Sweedler power of the integral,
* the closed form ν_n(V_i) = χ_i(P_n(Λ))·λ(e_i)/d_i² on simples,
* the trace of the cyclic-rotation operator on the invariants of V^{⊗n}.

Sweedler power maps P_n are kept as matrices and cached on the algebra.
"""

from __future__ import annotations

from . import linalg
from .hopf import HopfAlgebra, HopfError, ModuleRep
from .integrals import IntegralData
from .report import CheckReport
from .wedderburn import WedderburnData


class BudgetExceeded(HopfError):
    pass


TENSOR_BUDGET = 10**5


# ---------------------------------------------------------------------------
# Sweedler powers


def sweedler_power_matrix(H: HopfAlgebra, n: int) -> list:
    """Matrix of a ↦ a^[n] (column i = coordinates of P_n(b_i)).

    P_1 = id, P_{n+1}(a) = P_n(a₍₁₎)·a₍₂₎, P_0 = ηε,
    P_{-n}(a) = S(a₍₁₎)⋯S(a₍ₙ₎).
    """
    cache = H._power_cache
    if n in cache:
        return cache[n]
    F = H.field
    dim = H.n
    if n == 1:
        M = linalg.identity(F, dim)
    elif n == 0:
        M = [[F.mul(H.unit[r], H.counit[i]) for i in range(dim)] for r in range(dim)]
    elif n == -1:
        M = linalg.transpose(H.antipode)
    elif n > 1:
        prev = sweedler_power_matrix(H, n - 1)
        M = [[0] * dim for _ in range(dim)]
        for i in range(dim):
            for j, k, c in H._comult_rows[i]:
                col = [prev[r][j] for r in range(dim)]
                vec = _mul_vec_basis(H, col, k)
                for r in range(dim):
                    if vec[r]:
                        M[r][i] = F.add(M[r][i], F.mul(c, vec[r]))
    else:  # n < -1: P_{-(m+1)}(b_i) = Σ S(b_j)·P_{-m}(b_k)
        prev = sweedler_power_matrix(H, n + 1)
        s_cols = linalg.transpose(H.antipode)
        M = [[0] * dim for _ in range(dim)]
        for i in range(dim):
            for j, k, c in H._comult_rows[i]:
                sj = [s_cols[r][j] for r in range(dim)]
                pk = [prev[r][k] for r in range(dim)]
                vec = H._mul(sj, pk)
                for r in range(dim):
                    if vec[r]:
                        M[r][i] = F.add(M[r][i], F.mul(c, vec[r]))
    cache[n] = M
    return M


def _mul_vec_basis(H: HopfAlgebra, vec, k: int):
    """vec·b_k using the sparse multiplication rows."""
    F = H.field
    out = [0] * H.n
    for j, vj in enumerate(vec):
        if not vj:
            continue
        for t, c in H._mult_rows[j][k]:
            out[t] = F.add(out[t], F.mul(vj, c))
    return out


def sweedler_power(H: HopfAlgebra, a, n: int):
    coords = a.coeffs if hasattr(a, "coeffs") else list(a)
    return linalg.mat_vec(H.field, sweedler_power_matrix(H, n), coords)


def power_centrality_check(H: HopfAlgebra, data: IntegralData, n_values) -> CheckReport:
    """P_n(Λ) is a central, S-fixed element for every n."""
    rep = CheckReport("Sweedler powers of the integral")
    for n in n_values:
        pn = sweedler_power(H, data.lambda_H, n)
        central = H.left_mult_matrix(pn) == H.right_mult_matrix(pn)
        rep.add(f"P_{n}(Λ) central", central)
        rep.add(f"S(P_{n}(Λ)) = P_{n}(Λ)", H._apply_S(pn) == pn)
    return rep


# ---------------------------------------------------------------------------
# indicators from characters


def indicator(H: HopfAlgebra, data: IntegralData, chi, n: int):
    """ν_n(V) from the character of V: χ_V(u⁻¹·P_n(Λ))."""
    if hasattr(chi, "character"):
        chi = chi.character()
    pn = sweedler_power(H, data.lambda_H, n)
    return linalg.dot(H.field, chi, H._mul(data.u_inv, pn))


def indicator_simple(H: HopfAlgebra, data: IntegralData, wd: WedderburnData, i: int, n: int):
    """Closed form on the i-th simple: χ_i(P_n(Λ))·λ(e_i)/d_i²."""
    F = H.field
    pn = sweedler_power(H, data.lambda_H, n)
    d = F.from_int(wd.dims[i])
    return F.mul(
        linalg.dot(F, wd.characters[i], pn),
        F.div(wd.lambda_of_e[i], F.mul(d, d)),
    )


def nu_zero(H: HopfAlgebra, data: IntegralData, wd: WedderburnData, chi):
    """ν₀(V) = ε(Λ)·χ_V(u⁻¹), cross-checked against the idempotent expansion
    ε(Λ)·Σ λ(e_i)/d_i²·χ_V(e_i)."""
    F = H.field
    if hasattr(chi, "character"):
        chi = chi.character()
    direct = F.mul(data.eps_of_lambda, linalg.dot(F, chi, data.u_inv))
    acc = 0
    for e, d, lam_e in zip(wd.idempotents, wd.dims, wd.lambda_of_e):
        dd = F.from_int(d)
        acc = F.add(acc, F.mul(F.div(lam_e, F.mul(dd, dd)), linalg.dot(F, chi, e)))
    expanded = F.mul(data.eps_of_lambda, acc)
    if direct != expanded:
        raise HopfError("the two ν₀ expressions disagree")
    return direct


# ---------------------------------------------------------------------------
# indicators as operator traces


def tensor_power_rep(V: ModuleRep, n: int, budget: int = TENSOR_BUDGET) -> ModuleRep:
    """Action matrices on V^{⊗n}, built leg by leg through Δ."""
    if n < 1:
        raise ValueError("tensor power needs n >= 1")
    H = V.algebra
    total = H.n * (V.dim**n) ** 2
    if total > budget:
        raise BudgetExceeded(f"V^⊗{n} needs {total} matrix entries (budget {budget})")
    out = V
    for _ in range(n - 1):
        out = out.tensor(V)
    return out


def _cyclic_shift_matrix(F, d: int, n: int) -> list:
    """v₁⊗v₂⊗⋯⊗v_n ↦ v₂⊗⋯⊗v_n⊗v₁ on the standard product basis."""
    dim = d**n
    M = [[0] * dim for _ in range(dim)]
    for idx in range(dim):
        digits = []
        x = idx
        for _ in range(n):
            digits.append(x % d)
            x //= d
        digits.reverse()  # leg 1 is the most significant digit, as in kron
        rotated = digits[1:] + digits[:1]
        new = 0
        for t in rotated:
            new = new * d + t
        M[new][idx] = F.one
    return M


def operator_indicator(V: ModuleRep, data: IntegralData, n: int, budget: int = TENSOR_BUDGET):
    """ν_n(V) as the trace of v₁⊗⋯⊗v_n ↦ v₂⊗⋯⊗v_n⊗u⁻¹v₁ on the invariant
    subspace ρ(Λ/ε(Λ))·V^{⊗n}; defined for n ≥ 1.

    Everything here is tied to the idempotent integral: both the projector
    and the rotation use Λ/ε(Λ), so u⁻¹ gets the compensating ε(Λ) factor.
    """
    if n < 1:
        raise ValueError("the trace route needs n >= 1")
    H = V.algebra
    F = H.field
    Vn = tensor_power_rep(V, n, budget)
    scale = F.inv(data.eps_of_lambda)
    proj = Vn.act([F.mul(scale, c) for c in data.lambda_H])
    if linalg.mat_mul(F, proj, proj) != proj:
        raise HopfError("ρ(Λ/ε(Λ)) is not idempotent")
    cols = linalg.transpose(proj)
    R, pivots = linalg.rref(F, cols)
    basis = [R[r] for r in range(len(pivots))]  # rows span the image
    if not basis:
        return 0
    B = linalg.transpose(basis)
    u_inv = [F.mul(data.eps_of_lambda, c) for c in data.u_inv]
    T = linalg.mat_mul(
        F,
        _cyclic_shift_matrix(F, V.dim, n),
        linalg.kron(F, V.act(u_inv), linalg.identity(F, V.dim ** (n - 1))),
    )
    TB = linalg.mat_mul(F, T, B)
    X = linalg.solve_matrix(F, B, TB)
    if X is None:
        raise HopfError("rotation operator does not preserve the invariant subspace")
    return linalg.mat_trace(F, X)


def regular_indicator_trace(H: HopfAlgebra, data: IntegralData, n: int):
    """ν_n(H) = tr(S∘P_{n-1}), valid for every integer n."""
    F = H.field
    s_cols = linalg.transpose(H.antipode)
    return linalg.mat_trace(F, linalg.mat_mul(F, s_cols, sweedler_power_matrix(H, n - 1)))


# ---------------------------------------------------------------------------
# tables


class IndicatorTable:
    """ν_n for every simple module and the regular module, over a window of n."""

    def __init__(self, algebra, n_values, dims, rows, regular_row):
        self.algebra = algebra
        self.n_values = list(n_values)
        self.dims = dims
        self.rows = rows  # rows[i][n] over simples, in idempotent order
        self.regular_row = regular_row

    def fingerprint(self):
        """Multiset of (dimension, indicator row) pairs — the gauge-invariant shape."""
        return sorted(
            (d, tuple(row[n] for n in self.n_values)) for d, row in zip(self.dims, self.rows)
        )

    def lines(self):
        header = "n:      " + "  ".join(f"{n:>3}" for n in self.n_values)
        out = [header]
        F = self.algebra.field
        for i, (d, row) in enumerate(zip(self.dims, self.rows)):
            vals = "  ".join(f"{F.format_element(row[n]):>3}" for n in self.n_values)
            out.append(f"V_{i} d={d}: {vals}")
        vals = "  ".join(f"{F.format_element(self.regular_row[n]):>3}" for n in self.n_values)
        out.append(f"regular: {vals}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def indicator_table(
    H: HopfAlgebra, data: IntegralData, wd: WedderburnData, n_values
) -> IndicatorTable:
    """Indicator table over the given n window.

    Every entry is computed twice (character at u⁻¹P_n(Λ), and the closed
    form through λ(e_i)/d_i²) and the table is checked to be invariant under
    V ↦ V* and n ↦ -n before it is returned.
    """
    n_values = sorted(set(n_values))
    rows = []
    for i in range(wd.count):
        row = {}
        for n in n_values:
            val = indicator(H, data, wd.characters[i], n)
            if val != indicator_simple(H, data, wd, i, n):
                raise HopfError(f"indicator routes disagree at simple {i}, n = {n}")
            row[n] = val
        rows.append(row)
    for i in range(wd.count):
        j = wd.dual_perm[i]
        for n in n_values:
            if rows[i][n] != rows[j][n]:
                raise HopfError(f"ν_{n} differs between simple {i} and its dual {j}")
            if -n in rows[i] and rows[i][n] != rows[j][-n]:
                raise HopfError(f"ν_{n}(V_{i}) != ν_{-n}(V_{i}*)")
    regular_row = {n: regular_indicator_trace(H, data, n) for n in n_values}
    for n in n_values:
        acc = 0
        F = H.field
        for d, row in zip(wd.dims, rows):
            acc = F.add(acc, F.mul(F.from_int(d), row[n]))
        if acc != regular_row[n]:
            raise HopfError(f"Σ d_i·ν_{n}(V_i) != ν_{n}(H)")
    return IndicatorTable(H, n_values, list(wd.dims), rows, regular_row)
