"""Dense exact linear algebra and univariate polynomial arithmetic over a Field.

Matrices are lists of rows, vectors are flat lists, entries are encoded field
elements (plain ints).  Polynomials are ascending coefficient lists.  Nothing
here mutates its arguments.

Prime fields get inline mod-p elimination loops; extension fields go through
the Field methods.  The polynomial side carries everything needed to split a
commutative semisimple algebra: squarefree decomposition in characteristic p,
distinct-degree, and Cantor-Zassenhaus equal-degree splitting (with the trace
variant for characteristic 2).
"""

from __future__ import annotations

from .ff import Field


class LinalgError(ValueError):
    pass


class DimensionMismatch(LinalgError):
    pass


class SingularMatrix(LinalgError):
    pass


# ---------------------------------------------------------------------------
# matrices


def zeros(n: int, m: int):
    return [[0] * m for _ in range(n)]


def identity(F: Field, n: int):
    one = F.one
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = one
    return out


def mat_copy(A):
    return [row[:] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_add(F: Field, A, B):
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(F: Field, A, B):
    return [[F.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(F: Field, c, A):
    return [[F.mul(c, a) for a in row] for row in A]


def mat_mul(F: Field, A, B):
    if not A:
        return []
    if len(A[0]) != len(B):
        raise DimensionMismatch(f"{len(A)}x{len(A[0])} times {len(B)}x{len(B[0]) if B else 0}")
    Bt = transpose(B)
    if F.k == 1:
        p = F.p
        return [[sum(a * b for a, b in zip(row, col)) % p for col in Bt] for row in A]
    out = []
    for row in A:
        orow = []
        for col in Bt:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            orow.append(acc)
        out.append(orow)
    return out


def mat_vec(F: Field, A, v):
    if A and len(A[0]) != len(v):
        raise DimensionMismatch(f"{len(A)}x{len(A[0])} times vector of length {len(v)}")
    if F.k == 1:
        p = F.p
        return [sum(a * b for a, b in zip(row, v)) % p for row in A]
    out = []
    for row in A:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def vec_mat(F: Field, v, A):
    return mat_vec(F, transpose(A), v)


def vec_add(F: Field, u, v):
    return [F.add(a, b) for a, b in zip(u, v)]

def vec_sub(F: Field, u, v):
    return [F.sub(a, b) for a, b in zip(u, v)]

def vec_scale(F: Field, c, v):
    return [F.mul(c, a) for a in v]


def dot(F: Field, u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of lengths {len(u)} and {len(v)}")
    if F.k == 1:
        return sum(a * b for a, b in zip(u, v)) % F.p
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def mat_trace(F: Field, A):
    acc = 0
    for i in range(len(A)):
        acc = F.add(acc, A[i][i])
    return acc


def kron(F: Field, A, B):
    """Kronecker product; (i,j) block is A[i][j] * B."""
    if not A or not B:
        return []
    nb, mb = len(B), len(B[0])
    out = []
    for ra in A:
        for ib in range(nb):
            row = []
            for a in ra:
                if a == 0:
                    row.extend([0] * mb)
                else:
                    row.extend(F.mul(a, b) for b in B[ib])
            out.append(row)
    return out


def rref(F: Field, A):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    R = [row[:] for row in A]
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    if F.k == 1:
        p = F.p
        for c in range(ncols):
            pr = None
            for i in range(r, nrows):
                if R[i][c] % p:
                    pr = i
                    break
            if pr is None:
                continue
            R[r], R[pr] = R[pr], R[r]
            inv = pow(R[r][c], -1, p)
            if inv != 1:
                R[r] = [x * inv % p for x in R[r]]
            prow = R[r]
            for i in range(nrows):
                if i != r:
                    f = R[i][c] % p
                    if f:
                        R[i] = [(x - f * y) % p for x, y in zip(R[i], prow)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return R, pivots
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if R[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = F.inv(R[r][c])
        if inv != F.one:
            R[r] = [F.mul(inv, x) for x in R[r]]
        prow = R[r]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots


def rank(F: Field, A) -> int:
    _, pivots = rref(F, A)
    return len(pivots)


def kernel_basis(F: Field, A):
    """Basis of the right null space {v : A v = 0}."""
    ncols = len(A[0]) if A else 0
    R, pivots = rref(F, A)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis


def try_solve(F: Field, A, b):
    """Any solution x of A x = b, or None if inconsistent."""
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} rows vs rhs length {len(b)}")
    ncols = len(A[0]) if A else 0
    aug = [row + [bv] for row, bv in zip(A, b)]
    R, pivots = rref(F, aug)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = R[r][ncols]
    return x


def solve(F: Field, A, b):
    x = try_solve(F, A, b)
    if x is None:
        raise SingularMatrix("inconsistent linear system")
    return x


def solve_matrix(F: Field, A, B):
    """Any X with A X = B (column by column off one elimination), else None."""
    if len(A) != len(B):
        raise DimensionMismatch(f"{len(A)} rows vs {len(B)}")
    ncols = len(A[0]) if A else 0
    nrhs = len(B[0]) if B else 0
    aug = [row + brow for row, brow in zip(A, B)]
    R, pivots = rref(F, aug)
    if any(pc >= ncols for pc in pivots):
        return None
    X = [[0] * nrhs for _ in range(ncols)]
    for r, pc in enumerate(pivots):
        X[pc] = R[r][ncols:]
    return X


def inverse(F: Field, A):
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [row + irow for row, irow in zip(A, identity(F, n))]
    R, pivots = rref(F, aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in R]


def min_poly(F: Field, A):
    """Monic minimal polynomial of a square matrix, ascending coefficients.

    Powers of A are flattened and fed into an incremental triangular
    elimination; the first dependency read back through the bookkeeping
    combination is the minimal polynomial.
    """
    n = len(A)
    N = n * n
    power = identity(F, n)
    basis = []  # (reduced flat vector, pivot index, combination over powers)
    k = 0
    while True:
        vec = [power[i][j] for i in range(n) for j in range(n)]
        combo = [0] * (k + 1)
        combo[k] = F.one
        for bvec, bpiv, bcombo in basis:
            c = vec[bpiv]
            if c != 0:
                vec = [F.sub(x, F.mul(c, y)) for x, y in zip(vec, bvec)]
                for idx, cc in enumerate(bcombo):
                    combo[idx] = F.sub(combo[idx], F.mul(c, cc))
        piv = next((t for t in range(N) if vec[t] != 0), None)
        if piv is None:
            return combo  # monic by construction: nothing touches combo[k]
        inv = F.inv(vec[piv])
        if inv != F.one:
            vec = [F.mul(inv, x) for x in vec]
            combo = [F.mul(inv, x) for x in combo]
        basis.append((vec, piv, combo))
        k += 1
        power = mat_mul(F, power, A)


# ---------------------------------------------------------------------------
# polynomials (ascending coefficient lists over F)


def poly_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_deg(f) -> int:
    return len(poly_trim(f)) - 1


def poly_is_zero(f) -> bool:
    return all(c == 0 for c in f)


def poly_add(F: Field, f, g):
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return poly_trim([F.add(a, b) for a, b in zip(f, g)])


def poly_sub(F: Field, f, g):
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return poly_trim([F.sub(a, b) for a, b in zip(f, g)])


def poly_scale(F: Field, c, f):
    return poly_trim([F.mul(c, a) for a in f])


def poly_mul(F: Field, f, g):
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(out)


def poly_divmod(F: Field, f, g):
    f, g = poly_trim(f), poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return [], f
    inv_lead = F.inv(g[-1])
    rem = list(f)
    quo = [0] * (len(f) - len(g) + 1)
    for shift in range(len(f) - len(g), -1, -1):
        c = F.mul(rem[shift + len(g) - 1], inv_lead)
        if c:
            quo[shift] = c
            for i, gc in enumerate(g):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, gc))
    return poly_trim(quo), poly_trim(rem)


def poly_div(F: Field, f, g):
    q, r = poly_divmod(F, f, g)
    if r:
        raise LinalgError("polynomial division with remainder")
    return q


def poly_mod(F: Field, f, g):
    return poly_divmod(F, f, g)[1]


def poly_monic(F: Field, f):
    f = poly_trim(f)
    if not f or f[-1] == F.one:
        return f
    return poly_scale(F, F.inv(f[-1]), f)


def poly_gcd(F: Field, f, g):
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_mod(F, f, g)
    return poly_monic(F, f)


def poly_ext_gcd(F: Field, f, g):
    """(d, s, t) with s f + t g = d, d the monic gcd."""
    r0, r1 = poly_trim(f), poly_trim(g)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, q, t1))
    if r0 and r0[-1] != F.one:
        c = F.inv(r0[-1])
        r0, s0, t0 = poly_scale(F, c, r0), poly_scale(F, c, s0), poly_scale(F, c, t0)
    return r0, s0, t0


def poly_invmod(F: Field, f, m):
    d, s, _ = poly_ext_gcd(F, f, m)
    if poly_deg(d) != 0:
        raise LinalgError("polynomial not invertible modulo m")
    return poly_mod(F, poly_scale(F, F.inv(d[0]), s), m)


def poly_pow_mod(F: Field, f, e, m):
    result = [F.one]
    base = poly_mod(F, f, m)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), m)
        base = poly_mod(F, poly_mul(F, base, base), m)
        e >>= 1
    return result


def poly_eval(F: Field, f, x):
    acc = 0
    for c in reversed(poly_trim(f)):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_deriv(F: Field, f):
    return poly_trim([F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def _poly_pth_root(F: Field, f):
    """For f with zero derivative, the g with g(x)^p = f(x)."""
    p = F.p
    e = p ** (F.k - 1)  # coefficient-wise p-th root exponent in GF(p^k)
    out = []
    for i in range(0, len(f), p):
        out.append(F.pow(f[i], e))
    return poly_trim(out)


def squarefree_decomposition(F: Field, f):
    """Monic f as a product of pairwise-coprime squarefree parts.

    Returns [(g, m), ...] with f = prod g^m; handles the characteristic-p
    collapse f = h(x^p) by taking coefficient-wise p-th roots.
    """
    f = poly_monic(F, f)
    if poly_deg(f) < 1:
        return []
    df = poly_deriv(F, f)
    if poly_is_zero(df):
        return [(g, m * F.p) for g, m in squarefree_decomposition(F, _poly_pth_root(F, f))]
    out = []
    c = poly_gcd(F, f, df)
    w = poly_div(F, f, c)
    i = 1
    while poly_deg(w) > 0:
        y = poly_gcd(F, w, c)
        z = poly_div(F, w, y)
        if poly_deg(z) > 0:
            out.append((z, i))
        w = y
        c = poly_div(F, c, y)
        i += 1
    if poly_deg(c) > 0:
        out.extend((g, m * F.p) for g, m in squarefree_decomposition(F, _poly_pth_root(F, c)))
    return out


def distinct_degree_decomposition(F: Field, f):
    """Squarefree monic f -> [(product of irreducible factors of degree d, d)]."""
    out = []
    x = [0, F.one]
    h = x
    d = 0
    f = poly_monic(F, f)
    while poly_deg(f) > 0:
        d += 1
        if 2 * d > poly_deg(f):
            out.append((f, poly_deg(f)))
            break
        h = poly_pow_mod(F, h, F.q, f)
        g = poly_gcd(F, f, poly_sub(F, h, x))
        if poly_deg(g) > 0:
            out.append((g, d))
            f = poly_div(F, f, g)
            h = poly_mod(F, h, f)
    return out


def _equal_degree_split(F: Field, f, d, rng):
    """One nontrivial monic factor of f, where f is a squarefree product of
    at least two irreducibles, all of degree d."""
    n = poly_deg(f)
    while True:
        a = poly_trim([F.random(rng) for _ in range(n)])
        if poly_deg(a) < 1:
            continue
        g = poly_gcd(F, f, a)
        if 0 < poly_deg(g) < n:
            return g
        if F.p == 2:
            # trace map into GF(2): a + a^2 + a^4 + ... splits residue fields
            t = a
            cur = a
            for _ in range(F.k * d - 1):
                cur = poly_mod(F, poly_mul(F, cur, cur), f)
                t = poly_add(F, t, cur)
            g = poly_gcd(F, f, t)
        else:
            b = poly_pow_mod(F, a, (F.q**d - 1) // 2, f)
            g = poly_gcd(F, f, poly_sub(F, b, [F.one]))
        if 0 < poly_deg(g) < n:
            return g


def poly_factor(F: Field, f, rng):
    """Full irreducible factorization of nonconstant f.

    Returns [(monic irreducible, multiplicity), ...] sorted by degree then
    coefficients; rng drives the equal-degree splitting only.
    """
    factors: dict[tuple, int] = {}
    for sqf, mult in squarefree_decomposition(F, f):
        for block, d in distinct_degree_decomposition(F, sqf):
            stack = [block]
            while stack:
                g = stack.pop()
                if poly_deg(g) == d:
                    key = tuple(g)
                    factors[key] = factors.get(key, 0) + mult
                else:
                    h = _equal_degree_split(F, g, d, rng)
                    stack.append(h)
                    stack.append(poly_div(F, g, h))
    return [(list(key), m) for key, m in sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0]))]
