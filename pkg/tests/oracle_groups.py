"""Classical oracles for the group-algebra corpus members.

Everything here is computed from the raw Cayley tables and hand-written
complex character tables — none of the Hopf machinery under test is used.
Indices follow the conventions of hopflab.groups:

  c2/c3/c4: powers of the generator, identity first
  k4:       (a, b) in C2×C2 at index 2a+b
  s3:       permutation tuples of {0,1,2} in sorted order
  d4:       r^a s^b at index a + 4b
  q8:       1, -1, i, -i, j, -j, k, -k (index 2t + sign)
"""

import cmath
import itertools

I2PI = 2j * cmath.pi


def power(cayley, g, n, identity=0):
    """g^n by repeated table lookup; n may be any integer."""
    order = len(cayley)
    if n < 0:
        inv = next(h for h in range(order) if cayley[g][h] == identity)
        return power(cayley, inv, -n, identity)
    acc = identity
    for _ in range(n):
        acc = cayley[acc][g]
    return acc


def root_count(cayley, n, identity=0):
    """#{g : g^n = identity}."""
    return sum(1 for g in range(len(cayley)) if power(cayley, g, n, identity) == identity)


def _cyclic_chars(m):
    omega = cmath.exp(I2PI / m)
    return [(1, [omega ** (j * k) for k in range(m)]) for j in range(m)]


def _k4_chars():
    out = []
    for u in range(2):
        for v in range(2):
            out.append((1, [(-1) ** (u * (x // 2) + v * (x % 2)) for x in range(4)]))
    return out


def _s3_chars():
    perms = sorted(itertools.permutations(range(3)))
    sign = lambda p: 1 if sum(1 for i, j in itertools.combinations(range(3), 2) if p[i] > p[j]) % 2 == 0 else -1
    fixed = lambda p: sum(1 for i in range(3) if p[i] == i)
    return [
        (1, [1.0 for _ in perms]),
        (1, [float(sign(p)) for p in perms]),
        (2, [float(fixed(p) - 1) for p in perms]),
    ]


def _d4_chars():
    # element a + 4b is r^a s^b
    out = []
    for u in range(2):
        for v in range(2):
            out.append((1, [(-1) ** (u * (x % 4) + v * (x // 4)) for x in range(8)]))
    two = [2.0, 0.0, -2.0, 0.0, 0.0, 0.0, 0.0, 0.0]  # nonzero only on e and r²
    out.append((2, two))
    return out


def _q8_chars():
    # element 2t + s is (-1)^s · {1, i, j, k}[t]
    def linear(ci, cj):
        vals = []
        for x in range(8):
            t, s = divmod(x, 2)
            v = 1
            if t == 1:
                v = ci
            elif t == 2:
                v = cj
            elif t == 3:
                v = ci * cj
            vals.append(float(v))
        return (1, vals)

    out = [linear(1, 1), linear(1, -1), linear(-1, 1), linear(-1, -1)]
    two = [2.0, -2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]
    out.append((2, two))
    return out


CHARACTER_TABLES = {
    "c2": _cyclic_chars(2),
    "c3": _cyclic_chars(3),
    "c4": _cyclic_chars(4),
    "k4": _k4_chars(),
    "s3": _s3_chars(),
    "d4": _d4_chars(),
    "q8": _q8_chars(),
}


def classical_indicator(cayley, char_values, n):
    """(1/|G|) Σ_g χ(gⁿ) — an ordinary integer for every character."""
    m = len(cayley)
    total = sum(char_values[power(cayley, g, n)] for g in range(m)) / m
    nearest = round(total.real if isinstance(total, complex) else total)
    err = abs(total - nearest)
    assert err < 1e-9, f"classical indicator {total} is not an integer"
    return nearest


def classical_indicator_multiset(name, cayley, n):
    """Sorted (degree, ν_n) pairs over the irreducible characters."""
    return sorted(
        (deg, classical_indicator(cayley, vals, n)) for deg, vals in CHARACTER_TABLES[name]
    )
