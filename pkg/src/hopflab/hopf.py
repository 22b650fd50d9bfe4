"""Hopf algebra kernel: structure-constant data model, element and tensor
arithmetic, axiom verification, and explicit module (representation) handling.

Conventions, fixed once here and relied on everywhere:

* ``mult[i][j][k]``   — coefficient of b_k in b_i · b_j
* ``comult[i][j][k]`` — coefficient of b_j ⊗ b_k in Δ(b_i)
* ``unit``            — coordinates of 1
* ``counit``          — the covector ε
* ``antipode[i][j]``  — coefficient of b_j in S(b_i); S acts on coordinate
  rows as  x ↦ x · antipode

Raw internal arithmetic works on plain coefficient lists (and sparse dicts
for tensor degrees ≥ 2); the AlgElement / TensorElement wrappers carry the
owning algebra for the public surface.
"""

from __future__ import annotations

import itertools

from . import linalg
from .ff import Field
from .linalg import DimensionMismatch
from .report import CheckReport


class HopfError(ValueError):
    pass


class AlgebraMismatch(HopfError):
    pass


class NotAModule(HopfError):
    pass


class HopfAlgebra:
    """Finite-dimensional Hopf algebra over a finite field, given by dense
    structure tensors.  Immutable after construction; all operations pure.

    Construction only checks shapes — run :meth:`verify_axioms` to certify
    the tensors actually satisfy the Hopf axioms.
    """

    def __init__(self, field: Field, mult, comult, unit, counit, antipode, name: str = ""):
        n = len(unit)
        if n == 0:
            raise DimensionMismatch("zero-dimensional algebra")
        if len(mult) != n or any(len(row) != n for row in mult) or any(
            len(cell) != n for row in mult for cell in row
        ):
            raise DimensionMismatch("mult tensor is not n x n x n")
        if len(comult) != n or any(len(row) != n for row in comult) or any(
            len(cell) != n for row in comult for cell in row
        ):
            raise DimensionMismatch("comult tensor is not n x (n x n)")
        if len(counit) != n:
            raise DimensionMismatch("counit length != n")
        if len(antipode) != n or any(len(row) != n for row in antipode):
            raise DimensionMismatch("antipode matrix is not n x n")
        self.field = field
        self.n = n
        self.mult = mult
        self.comult = comult
        self.unit = list(unit)
        self.counit = list(counit)
        self.antipode = antipode
        self.name = name
        # sparse views; the corpus tensors are mostly permutation-like and
        # these keep the contraction loops proportional to actual support
        self._mult_rows = [
            [[(k, c) for k, c in enumerate(mult[i][j]) if c] for j in range(n)] for i in range(n)
        ]
        self._comult_rows = [
            [
                (j, k, comult[i][j][k])
                for j in range(n)
                for k in range(n)
                if comult[i][j][k]
            ]
            for i in range(n)
        ]
        self._power_cache: dict[int, list] = {}

    # -- raw list-level arithmetic --------------------------------------

    def _mul(self, a, b):
        F = self.field
        out = [0] * self.n
        for i, ai in enumerate(a):
            if not ai:
                continue
            rows = self._mult_rows[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = F.mul(ai, bj)
                for k, ck in rows[j]:
                    out[k] = F.add(out[k], F.mul(c, ck))
        return out

    def _mul_many(self, *elts):
        acc = elts[0]
        for e in elts[1:]:
            acc = self._mul(acc, e)
        return acc

    def _apply_S(self, a):
        F = self.field
        out = [0] * self.n
        for i, ai in enumerate(a):
            if ai:
                row = self.antipode[i]
                for j in range(self.n):
                    if row[j]:
                        out[j] = F.add(out[j], F.mul(ai, row[j]))
        return out

    def _counit(self, a):
        return linalg.dot(self.field, self.counit, a)

    def _comul(self, a):
        """Δ(a) as a sparse dict {(j, k): coeff}."""
        F = self.field
        out: dict[tuple, int] = {}
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, k, c in self._comult_rows[i]:
                key = (j, k)
                v = F.add(out.get(key, 0), F.mul(ai, c))
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return out

    def _delta(self, a, m):
        """Iterated coproduct Δ_{m-1}(a) as a sparse dict on m-tuples."""
        if m < 1:
            raise HopfError("iterated coproduct needs at least one leg")
        F = self.field
        data = {(i,): ai for i, ai in enumerate(a) if ai}
        for _ in range(m - 1):
            nxt: dict[tuple, int] = {}
            for key, c in data.items():
                i = key[0]  # left fold: expand the first leg each round
                rest = key[1:]
                for j, k, cc in self._comult_rows[i]:
                    nkey = (j, k) + rest
                    v = F.add(nxt.get(nkey, 0), F.mul(c, cc))
                    if v:
                        nxt[nkey] = v
                    elif nkey in nxt:
                        del nxt[nkey]
            data = nxt
        return data

    def left_mult_matrix(self, a) -> list:
        """Matrix of L_a (x ↦ a·x) on coordinate columns; tr L_a = χ_H(a)."""
        a = _coords(self, a)
        F = self.field
        M = [[0] * self.n for _ in range(self.n)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            rows = self._mult_rows[i]
            for j in range(self.n):
                for k, ck in rows[j]:
                    M[k][j] = F.add(M[k][j], F.mul(ai, ck))
        return M

    def right_mult_matrix(self, a) -> list:
        a = _coords(self, a)
        F = self.field
        M = [[0] * self.n for _ in range(self.n)]
        for j, aj in enumerate(a):
            if not aj:
                continue
            for i in range(self.n):
                for k, ck in self._mult_rows[i][j]:
                    M[k][i] = F.add(M[k][i], F.mul(aj, ck))
        return M

    # -- public element surface -----------------------------------------

    def element(self, coeffs) -> "AlgElement":
        coeffs = list(coeffs)
        if len(coeffs) != self.n:
            raise DimensionMismatch(f"expected {self.n} coordinates, got {len(coeffs)}")
        return AlgElement(self, coeffs)

    def basis(self, i: int) -> "AlgElement":
        v = [0] * self.n
        v[i] = self.field.one
        return AlgElement(self, v)

    def one(self) -> "AlgElement":
        return AlgElement(self, list(self.unit))

    def zero(self) -> "AlgElement":
        return AlgElement(self, [0] * self.n)

    def multiply(self, a: "AlgElement", b: "AlgElement") -> "AlgElement":
        _same(self, a, b)
        return AlgElement(self, self._mul(a.coeffs, b.coeffs))

    def comultiply(self, a: "AlgElement") -> "TensorElement":
        _same(self, a)
        return TensorElement(self, 2, self._comul(a.coeffs))

    def antipode_apply(self, a: "AlgElement") -> "AlgElement":
        _same(self, a)
        return AlgElement(self, self._apply_S(a.coeffs))

    def counit_apply(self, a: "AlgElement"):
        _same(self, a)
        return self._counit(a.coeffs)

    def iterated_coproduct(self, a: "AlgElement", m: int) -> "TensorElement":
        _same(self, a)
        return TensorElement(self, m, self._delta(a.coeffs, m))

    # -- structural matrices ---------------------------------------------

    def s_square_matrix(self):
        return linalg.mat_mul(self.field, self.antipode, self.antipode)

    def is_involutory(self) -> bool:
        return self.s_square_matrix() == linalg.identity(self.field, self.n)

    def is_cocommutative(self) -> bool:
        for i in range(self.n):
            for j, k, c in self._comult_rows[i]:
                if self.comult[i][k][j] != c:
                    return False
        return True

    def is_commutative(self) -> bool:
        return all(
            self.mult[i][j] == self.mult[j][i] for i in range(self.n) for j in range(self.n)
        )

    # -- axiom verification ----------------------------------------------

    def verify_axioms(self) -> CheckReport:
        """Exhaustive check of all Hopf axiom families over basis tuples.

        Failures are report entries with the first offending tuple, not
        exceptions: corrupt inputs should be diagnosable, not fatal.
        """
        F = self.field
        n = self.n
        rep = CheckReport(f"hopf axioms{' of ' + self.name if self.name else ''}")
        basis = [[F.one if t == i else 0 for t in range(n)] for i in range(n)]

        wit = None
        for i in range(n):
            for j in range(n):
                ij = self._mul(basis[i], basis[j])
                for k in range(n):
                    if self._mul(ij, basis[k]) != self._mul(basis[i], self._mul(basis[j], basis[k])):
                        wit = f"(b{i} b{j}) b{k}"
                        break
                if wit:
                    break
            if wit:
                break
        rep.add("associativity", wit is None, wit)

        wit = None
        for i in range(n):
            if self._mul(self.unit, basis[i]) != basis[i] or self._mul(basis[i], self.unit) != basis[i]:
                wit = f"b{i}"
                break
        rep.add("unit", wit is None, wit)

        wit = None
        for i in range(n):
            d = self._delta(basis[i], 2)
            left = _expand_leg_dict(self, d, 0)
            right = _expand_leg_dict(self, d, 1)
            if left != right:
                wit = f"b{i}"
                break
        rep.add("coassociativity", wit is None, wit)

        wit = None
        for i in range(n):
            lhs = [0] * n
            rhs = [0] * n
            for (j, k), c in self._comul(basis[i]).items():
                lhs[k] = F.add(lhs[k], F.mul(c, self.counit[j]))
                rhs[j] = F.add(rhs[j], F.mul(c, self.counit[k]))
            if lhs != basis[i] or rhs != basis[i]:
                wit = f"b{i}"
                break
        rep.add("counit", wit is None, wit)

        wit = None
        for i in range(n):
            for j in range(n):
                prod = self._mul(basis[i], basis[j])
                lhs = self._comul(prod)
                rhs = _tensor_mul_dict(self, self._comul(basis[i]), self._comul(basis[j]))
                if lhs != rhs:
                    wit = f"b{i} b{j}"
                    break
            if wit:
                break
        rep.add("comultiplication is an algebra map", wit is None, wit)

        wit = None
        one = F.one
        if self._counit(self.unit) != one:
            wit = "eps(1) != 1"
        else:
            for i in range(n):
                for j in range(n):
                    if self._counit(self._mul(basis[i], basis[j])) != F.mul(
                        self.counit[i], self.counit[j]
                    ):
                        wit = f"b{i} b{j}"
                        break
                if wit:
                    break
        rep.add("counit is an algebra map", wit is None, wit)

        wit = None
        for i in range(n):
            left = [0] * n
            right = [0] * n
            for (j, k), c in self._comul(basis[i]).items():
                sj_bk = self._mul(self._apply_S(basis[j]), basis[k])
                bj_sk = self._mul(basis[j], self._apply_S(basis[k]))
                for t in range(n):
                    left[t] = F.add(left[t], F.mul(c, sj_bk[t]))
                    right[t] = F.add(right[t], F.mul(c, bj_sk[t]))
            target = [F.mul(self.counit[i], x) for x in self.unit]
            if left != target or right != target:
                wit = f"b{i}"
                break
        rep.add("antipode identity", wit is None, wit)

        try:
            linalg.inverse(F, self.antipode)
            rep.add("antipode bijective", True)
        except linalg.SingularMatrix:
            rep.add("antipode bijective", False, "S matrix singular")
        return rep

    # -- field extension --------------------------------------------------

    def extend_scalars(self, target: Field) -> "HopfAlgebra":
        """Same structure constants over a larger field (entrywise embedding)."""
        emb = lambda c: self.field.embed(c, target)
        return HopfAlgebra(
            target,
            [[[emb(c) for c in cell] for cell in row] for row in self.mult],
            [[[emb(c) for c in cell] for cell in row] for row in self.comult],
            [emb(c) for c in self.unit],
            [emb(c) for c in self.counit],
            [[emb(c) for c in row] for row in self.antipode],
            name=self.name,
        )

    def __eq__(self, other):
        return (
            isinstance(other, HopfAlgebra)
            and other.field == self.field
            and other.mult == self.mult
            and other.comult == self.comult
            and other.unit == self.unit
            and other.counit == self.counit
            and other.antipode == self.antipode
        )

    def __repr__(self):
        label = self.name or "?"
        return f"HopfAlgebra({label}, dim {self.n} over {self.field})"


def _same(H: HopfAlgebra, *elts):
    for e in elts:
        if e.algebra is not H and e.algebra != H:
            raise AlgebraMismatch("element belongs to a different algebra")


def _coords(H: HopfAlgebra, a):
    if isinstance(a, AlgElement):
        _same(H, a)
        return a.coeffs
    return a


class AlgElement:
    """Element of H as a coordinate vector in the declared basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: HopfAlgebra, coeffs):
        self.algebra = algebra
        self.coeffs = list(coeffs)

    def __add__(self, other):
        _same(self.algebra, other)
        F = self.algebra.field
        return AlgElement(self.algebra, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        _same(self.algebra, other)
        F = self.algebra.field
        return AlgElement(self.algebra, [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        return self.algebra.multiply(self, other)

    def scale(self, c):
        F = self.algebra.field
        return AlgElement(self.algebra, [F.mul(c, a) for a in self.coeffs])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, AlgElement)
            and other.algebra == self.algebra
            and other.coeffs == self.coeffs
        )

    def __repr__(self):
        return f"AlgElement({self.coeffs})"


# ---------------------------------------------------------------------------
# tensors


def _tensor_mul_dict(H: HopfAlgebra, a: dict, b: dict) -> dict:
    """Legwise product of sparse tensors of equal order."""
    F = H.field
    out: dict[tuple, int] = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            c0 = F.mul(ca, cb)
            if not c0:
                continue
            legs = [H._mult_rows[i][j] for i, j in zip(ka, kb)]
            for combo in itertools.product(*legs):
                c = c0
                for _, ck in combo:
                    c = F.mul(c, ck)
                key = tuple(k for k, _ in combo)
                v = F.add(out.get(key, 0), c)
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
    return out


def _expand_leg_dict(H: HopfAlgebra, data: dict, pos: int) -> dict:
    """Apply Δ to one leg, raising the order by one."""
    F = H.field
    out: dict[tuple, int] = {}
    for key, c in data.items():
        i = key[pos]
        for j, k, cc in H._comult_rows[i]:
            nkey = key[:pos] + (j, k) + key[pos + 1 :]
            v = F.add(out.get(nkey, 0), F.mul(c, cc))
            if v:
                out[nkey] = v
            elif nkey in out:
                del out[nkey]
    return out


def _map_leg_dict(H: HopfAlgebra, data: dict, pos: int, rows) -> dict:
    """Apply a linear map, given by sparse images rows[i] = [(k, c)], to one leg."""
    F = H.field
    out: dict[tuple, int] = {}
    for key, c in data.items():
        for k, cc in rows[key[pos]]:
            nkey = key[:pos] + (k,) + key[pos + 1 :]
            v = F.add(out.get(nkey, 0), F.mul(c, cc))
            if v:
                out[nkey] = v
            elif nkey in out:
                del out[nkey]
    return out


def _sparse_rows_S(H: HopfAlgebra):
    return [[(j, c) for j, c in enumerate(row) if c] for row in H.antipode]


def _sparse_rows_left_mul(H: HopfAlgebra, vec):
    """rows[i] = coordinates of vec · b_i, sparsely."""
    F = H.field
    out = []
    for i in range(H.n):
        acc: dict[int, int] = {}
        for j, vj in enumerate(vec):
            if not vj:
                continue
            for k, ck in H._mult_rows[j][i]:
                v = F.add(acc.get(k, 0), F.mul(vj, ck))
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
        out.append(sorted(acc.items()))
    return out


def _sparse_rows_right_mul(H: HopfAlgebra, vec):
    """rows[i] = coordinates of b_i · vec, sparsely."""
    F = H.field
    out = []
    for i in range(H.n):
        acc: dict[int, int] = {}
        rows = H._mult_rows[i]
        for j, vj in enumerate(vec):
            if not vj:
                continue
            for k, ck in rows[j]:
                v = F.add(acc.get(k, 0), F.mul(vj, ck))
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
        out.append(sorted(acc.items()))
    return out


class TensorElement:
    """Element of H^⊗m, sparse dict over basis multi-indices.

    Equality and arithmetic follow dense semantics (zero coefficients are
    just absent keys); ``to_dense`` flattens lexicographically.
    """

    __slots__ = ("algebra", "order", "data")

    def __init__(self, algebra: HopfAlgebra, order: int, data: dict):
        if order < 1:
            raise HopfError("tensor order must be >= 1")
        self.algebra = algebra
        self.order = order
        self.data = {k: c for k, c in data.items() if c}

    @classmethod
    def from_dense(cls, algebra: HopfAlgebra, order: int, coeffs):
        n = algebra.n
        if len(coeffs) != n**order:
            raise DimensionMismatch(f"expected {n ** order} coordinates")
        data = {}
        for flat, c in enumerate(coeffs):
            if c:
                key = []
                rem = flat
                for _ in range(order):
                    rem, r = divmod(rem, n)
                    key.append(r)
                data[tuple(reversed(key))] = c
        return cls(algebra, order, data)

    @classmethod
    def pure(cls, algebra: HopfAlgebra, *factors: AlgElement):
        """Decomposable tensor a₁⊗…⊗a_m."""
        F = algebra.field
        data: dict[tuple, int] = {}
        supports = [
            [(i, c) for i, c in enumerate(_coords(algebra, f)) if c] for f in factors
        ]
        for combo in itertools.product(*supports):
            c = F.one
            for _, cc in combo:
                c = F.mul(c, cc)
            data[tuple(i for i, _ in combo)] = c
        return cls(algebra, len(factors), data)

    def to_dense(self):
        n = self.algebra.n
        out = [0] * n**self.order
        for key, c in self.data.items():
            flat = 0
            for i in key:
                flat = flat * n + i
            out[flat] = c
        return out

    def get(self, key) -> int:
        return self.data.get(tuple(key), 0)

    def add(self, other: "TensorElement") -> "TensorElement":
        self._compat(other)
        F = self.algebra.field
        data = dict(self.data)
        for k, c in other.data.items():
            v = F.add(data.get(k, 0), c)
            if v:
                data[k] = v
            elif k in data:
                del data[k]
        return TensorElement(self.algebra, self.order, data)

    def sub(self, other: "TensorElement") -> "TensorElement":
        return self.add(other.scale(self.algebra.field.neg(self.algebra.field.one)))

    def scale(self, c) -> "TensorElement":
        F = self.algebra.field
        return TensorElement(self.algebra, self.order, {k: F.mul(c, v) for k, v in self.data.items()})

    def mul(self, other: "TensorElement") -> "TensorElement":
        """Componentwise (legwise) algebra product in H^⊗m."""
        self._compat(other)
        return TensorElement(
            self.algebra, self.order, _tensor_mul_dict(self.algebra, self.data, other.data)
        )

    def flip(self) -> "TensorElement":
        if self.order != 2:
            raise HopfError("flip is for order-2 tensors")
        return TensorElement(self.algebra, 2, {(k, j): c for (j, k), c in self.data.items()})

    def rotate(self, shift: int = 1) -> "TensorElement":
        """Cyclic leg rotation: leg t of the result is leg (t+shift) mod m."""
        m = self.order
        shift %= m
        return TensorElement(
            self.algebra, m, {key[shift:] + key[:shift]: c for key, c in self.data.items()}
        )

    def expand_leg(self, pos: int) -> "TensorElement":
        return TensorElement(
            self.algebra, self.order + 1, _expand_leg_dict(self.algebra, self.data, pos)
        )

    def map_leg(self, pos: int, rows) -> "TensorElement":
        return TensorElement(
            self.algebra, self.order, _map_leg_dict(self.algebra, self.data, pos, rows)
        )

    def antipode_leg(self, pos: int) -> "TensorElement":
        return self.map_leg(pos, _sparse_rows_S(self.algebra))

    def mul_left_on_leg(self, pos: int, vec) -> "TensorElement":
        """Replace leg value x by vec·x."""
        return self.map_leg(pos, _sparse_rows_left_mul(self.algebra, _coords(self.algebra, vec)))

    def mul_right_on_leg(self, pos: int, vec) -> "TensorElement":
        """Replace leg value x by x·vec."""
        return self.map_leg(pos, _sparse_rows_right_mul(self.algebra, _coords(self.algebra, vec)))

    def contract_leg(self, pos: int, covec) -> "TensorElement | int":
        """Apply a functional to one leg; order drops by one (scalar if m=1)."""
        F = self.algebra.field
        if self.order == 1:
            acc = 0
            for (i,), c in self.data.items():
                acc = F.add(acc, F.mul(c, covec[i]))
            return acc
        out: dict[tuple, int] = {}
        for key, c in self.data.items():
            w = covec[key[pos]]
            if not w:
                continue
            nkey = key[:pos] + key[pos + 1 :]
            v = F.add(out.get(nkey, 0), F.mul(c, w))
            if v:
                out[nkey] = v
            elif nkey in out:
                del out[nkey]
        return TensorElement(self.algebra, self.order - 1, out)

    def multiply_legs(self) -> AlgElement:
        """Multiply all legs left to right, landing in H."""
        H = self.algebra
        F = H.field
        out = [0] * H.n
        for key, c in self.data.items():
            prod = None
            for i in key:
                prod = (
                    [F.one if t == i else 0 for t in range(H.n)]
                    if prod is None
                    else H._mul(prod, [F.one if t == i else 0 for t in range(H.n)])
                )
            for t, v in enumerate(prod):
                if v:
                    out[t] = F.add(out[t], F.mul(c, v))
        return AlgElement(H, out)

    def is_zero(self) -> bool:
        return not self.data

    def _compat(self, other: "TensorElement"):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("tensors over different algebras")
        if other.order != self.order:
            raise DimensionMismatch(f"tensor orders {self.order} vs {other.order}")

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and other.algebra == self.algebra
            and other.order == self.order
            and other.data == self.data
        )

    def __repr__(self):
        return f"TensorElement(order {self.order}, {len(self.data)} terms)"


# ---------------------------------------------------------------------------
# antipode recovery (for bialgebra-only input files)


def solve_antipode(field: Field, mult, comult, unit, counit):
    """Solve the antipode axiom m(S⊗id)Δ = ηε for the matrix of S.

    The axiom is linear in the unknown entries s[j][l]; a finite-dimensional
    Hopf algebra has exactly one antipode, so the system must pin all n²
    unknowns.  Raises SingularMatrix when the bialgebra is not Hopf.
    """
    n = len(unit)
    F = field
    rows = []
    rhs = []
    for i in range(n):
        # equation family: sum_{j,k} comult[i][j][k] S(b_j)·b_k = eps(b_i)·1
        coeff = [[[0] * n for _ in range(n)] for _ in range(n)]  # [m][j][l]
        for j in range(n):
            for k in range(n):
                c = comult[i][j][k]
                if not c:
                    continue
                for l in range(n):
                    for m_, cm in enumerate(mult[l][k]):
                        if cm:
                            coeff[m_][j][l] = F.add(coeff[m_][j][l], F.mul(c, cm))
        for m_ in range(n):
            rows.append([coeff[m_][j][l] for j in range(n) for l in range(n)])
            rhs.append(F.mul(counit[i], unit[m_]))
    flat = linalg.solve(F, rows, rhs)
    return [[flat[j * n + l] for l in range(n)] for j in range(n)]


# ---------------------------------------------------------------------------
# modules


class ModuleRep:
    """Left H-module by explicit action matrices, one per basis element."""

    def __init__(self, algebra: HopfAlgebra, action: list, name: str = ""):
        if len(action) != algebra.n:
            raise DimensionMismatch(f"need {algebra.n} action matrices, got {len(action)}")
        d = len(action[0])
        for M in action:
            if len(M) != d or any(len(row) != d for row in M):
                raise DimensionMismatch("action matrices must share a square shape")
        self.algebra = algebra
        self.dim = d
        self.action = action
        self.name = name

    def act(self, a) -> list:
        """Matrix of the action of an element (coordinate linear combination)."""
        F = self.algebra.field
        a = _coords(self.algebra, a)
        out = [[0] * self.dim for _ in range(self.dim)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            M = self.action[i]
            for r in range(self.dim):
                row = M[r]
                orow = out[r]
                for c in range(self.dim):
                    if row[c]:
                        orow[c] = F.add(orow[c], F.mul(ai, row[c]))
        return out

    def verify(self) -> CheckReport:
        F = self.algebra.field
        H = self.algebra
        rep = CheckReport(f"module axioms{' of ' + self.name if self.name else ''}")
        ok = self.act(H.unit) == linalg.identity(F, self.dim)
        rep.add("unit acts as identity", ok, None if ok else "rho(1) != I")
        wit = None
        for i in range(H.n):
            for j in range(H.n):
                lhs = linalg.mat_mul(F, self.action[i], self.action[j])
                rhs = [[0] * self.dim for _ in range(self.dim)]
                for k, c in H._mult_rows[i][j]:
                    M = self.action[k]
                    for r in range(self.dim):
                        for s in range(self.dim):
                            if M[r][s]:
                                rhs[r][s] = F.add(rhs[r][s], F.mul(c, M[r][s]))
                if lhs != rhs:
                    wit = f"b{i} b{j}"
                    break
            if wit:
                break
        rep.add("action respects multiplication", wit is None, wit)
        return rep

    def validate(self) -> "ModuleRep":
        rep = self.verify()
        if not rep.ok:
            raise NotAModule("; ".join(e.line() for e in rep.failures()))
        return self

    def character(self) -> list:
        F = self.algebra.field
        return [linalg.mat_trace(F, M) for M in self.action]

    def dual(self) -> "ModuleRep":
        """Action on V*: ρ*(h) = ρ(S(h))ᵀ."""
        H = self.algebra
        F = H.field
        out = []
        for i in range(H.n):
            s_img = H._apply_S([F.one if t == i else 0 for t in range(H.n)])
            out.append(linalg.transpose(self.act(s_img)))
        return ModuleRep(H, out, name=f"{self.name}*" if self.name else "")

    def tensor(self, other: "ModuleRep") -> "ModuleRep":
        """Action on V⊗W through Δ."""
        H = self.algebra
        if other.algebra is not H and other.algebra != H:
            raise AlgebraMismatch("modules over different algebras")
        F = H.field
        d = self.dim * other.dim
        out = []
        for i in range(H.n):
            M = [[0] * d for _ in range(d)]
            for j, k, c in H._comult_rows[i]:
                K = linalg.kron(F, self.action[j], other.action[k])
                for r in range(d):
                    Kr = K[r]
                    Mr = M[r]
                    for s in range(d):
                        if Kr[s]:
                            Mr[s] = F.add(Mr[s], F.mul(c, Kr[s]))
            out.append(M)
        return ModuleRep(H, out)

    def __repr__(self):
        return f"ModuleRep(dim {self.dim} over dim-{self.algebra.n} algebra)"


def trivial_module(H: HopfAlgebra) -> ModuleRep:
    return ModuleRep(H, [[[H.counit[i]]] for i in range(H.n)], name="trivial")


def regular_module(H: HopfAlgebra) -> ModuleRep:
    return ModuleRep(H, [H.left_mult_matrix(H.basis(i)) for i in range(H.n)], name="regular")
