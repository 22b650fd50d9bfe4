"""Small finite groups as explicit Cayley tables.

These feed the example builders; everything is validated exhaustively at
construction (orders here are ≤ 64, so brute force is the right tool).
"""

from __future__ import annotations

import itertools


class GroupError(ValueError):
    pass


class GroupTable:
    def __init__(self, cayley, names=None, label: str = ""):
        m = len(cayley)
        if any(len(row) != m for row in cayley):
            raise GroupError("cayley table not square")
        self.order = m
        self.cayley = [list(row) for row in cayley]
        self.names = list(names) if names else [f"g{i}" for i in range(m)]
        self.label = label
        self.identity = self._find_identity()
        self.inverse = self._find_inverses()
        self._validate()

    def _find_identity(self):
        for e in range(self.order):
            if all(
                self.cayley[e][x] == x and self.cayley[x][e] == x for x in range(self.order)
            ):
                return e
        raise GroupError("no identity element")

    def _find_inverses(self):
        inv = []
        for x in range(self.order):
            for y in range(self.order):
                if self.cayley[x][y] == self.identity and self.cayley[y][x] == self.identity:
                    inv.append(y)
                    break
            else:
                raise GroupError(f"element {x} has no inverse")
        return inv

    def _validate(self):
        m = self.order
        for row in self.cayley:
            if sorted(row) != list(range(m)):
                raise GroupError("rows are not permutations")
        for col in zip(*self.cayley):
            if sorted(col) != list(range(m)):
                raise GroupError("columns are not permutations")
        for a in range(m):
            for b in range(m):
                ab = self.cayley[a][b]
                for c in range(m):
                    if self.cayley[ab][c] != self.cayley[a][self.cayley[b][c]]:
                        raise GroupError(f"associativity fails at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inverse[a], -n)
        acc = self.identity
        for _ in range(n):
            acc = self.cayley[acc][a]
        return acc

    def conjugate(self, h: int, x: int) -> int:
        """h x h^{-1}."""
        return self.cayley[self.cayley[h][x]][self.inverse[h]]

    def is_abelian(self) -> bool:
        return all(
            self.cayley[a][b] == self.cayley[b][a]
            for a in range(self.order)
            for b in range(self.order)
        )

    def __repr__(self):
        return f"GroupTable({self.label or '?'}, order {self.order})"


def cyclic(n: int) -> GroupTable:
    names = ["e"] + [f"g{'' if i == 1 else i}" for i in range(1, n)]
    return GroupTable([[(i + j) % n for j in range(n)] for i in range(n)], names, f"C{n}")


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    ma, mb = A.order, B.order
    idx = lambda a, b: a * mb + b
    cayley = [
        [
            idx(A.cayley[a1][a2], B.cayley[b1][b2])
            for a2 in range(ma)
            for b2 in range(mb)
        ]
        for a1 in range(ma)
        for b1 in range(mb)
    ]
    names = [f"({A.names[a]},{B.names[b]})" for a in range(ma) for b in range(mb)]
    return GroupTable(cayley, names, f"{A.label}x{B.label}")


def klein_four() -> GroupTable:
    G = direct_product(cyclic(2), cyclic(2))
    G.label = "K4"
    return G


def symmetric3() -> GroupTable:
    """S3 as permutations of {0,1,2}; composition (s*t)(x) = s(t(x))."""
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    cayley = [
        [index[tuple(s[t[x]] for x in range(3))] for t in perms] for s in perms
    ]

    def name(p):
        if p == (0, 1, 2):
            return "e"
        fixed = [x for x in range(3) if p[x] == x]
        if fixed:
            a, b = [x for x in range(3) if x not in fixed]
            return f"({a+1}{b+1})"
        return "(123)" if p == (1, 2, 0) else "(132)"

    return GroupTable(cayley, [name(p) for p in perms], "S3")


def dihedral4() -> GroupTable:
    """D4 of order 8: r^4 = s^2 = e, s r s = r^{-1}; element (a,b) = r^a s^b."""
    idx = lambda a, b: a + 4 * b

    def mul(x, y):
        a, b = x % 4, x // 4
        c, d = y % 4, y // 4
        if b == 0:
            return idx((a + c) % 4, d)
        return idx((a - c) % 4, (1 + d) % 2)

    cayley = [[mul(x, y) for y in range(8)] for x in range(8)]
    names = [f"r{a}" if b == 0 else f"r{a}s" for b in range(2) for a in range(4)]
    names[0] = "e"
    names[4] = "s"
    return GroupTable(cayley, names, "D4")


def quaternion8() -> GroupTable:
    """Q8 = {±1, ±i, ±j, ±k}; index 2t + sign with sign 0 ↦ +, 1 ↦ −."""
    # basis letters 0=1, 1=i, 2=j, 3=k; table of (sign, letter) products
    letter_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def mul(x, y):
        tx, sx = x // 2, x % 2
        ty, sy = y // 2, y % 2
        flip, t = letter_mul[(tx, ty)]
        return 2 * t + (sx + sy + flip) % 2

    cayley = [[mul(x, y) for y in range(8)] for x in range(8)]
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return GroupTable(cayley, names, "Q8")


BUNDLED_GROUPS = {
    "c2": cyclic(2),
    "c3": cyclic(3),
    "c4": cyclic(4),
    "k4": klein_four(),
    "s3": symmetric3(),
    "d4": dihedral4(),
    "q8": quaternion8(),
}
