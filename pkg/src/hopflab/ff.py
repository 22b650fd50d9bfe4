"""Exact arithmetic in GF(p) and GF(p^k).

Field elements are plain Python ints in ``range(q)``, q = p**k, encoding the
coefficient vector (c0, ..., c_{k-1}) of a polynomial-basis representative as
c0 + c1*p + ... in base p.  For k = 1 this is the ordinary residue.  All
arithmetic goes through the owning :class:`Field`, fieldmath-style:
``F.mul(a, b)`` rather than operator overloading, which keeps bulk linear
algebra free of per-element object overhead.
"""

from __future__ import annotations


class FieldError(ValueError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class CharacteristicMismatch(FieldError):
    pass


def is_prime(n: int) -> bool:
    """Trial division; fine for desk-scale characteristics (< 2**31)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- small polynomial helpers over GF(p), used only for modulus validation ---
# Coefficient lists are ascending, not necessarily normalized.


def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pmod(_ptrim(out), mod, p)


def _pmod(f, mod, p):
    f = list(f)
    d = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(f) > d:
        c = f[-1] * inv_lead % p
        if c:
            shift = len(f) - 1 - d
            for i, m in enumerate(mod):
                f[shift + i] = (f[shift + i] - c * m) % p
        f.pop()
    return _ptrim(f)


def _ppowmod(f, e, mod, p):
    result = [1]
    base = _pmod(f, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(f, g, p):
    f, g = _ptrim(list(f)), _ptrim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def is_irreducible(modulus, p: int) -> bool:
    """Rabin test: x^(p^k) = x mod f, and gcd(x^(p^(k/d)) - x, f) = 1 for
    every prime divisor d of k."""
    f = _ptrim(list(modulus))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    xq = _ppowmod(x, p**k, f, p)
    if _ptrim([(a - b) % p for a, b in zip_pad(xq, x, p)]) != []:
        return False
    for d in _prime_divisors(k):
        xe = _ppowmod(x, p ** (k // d), f, p)
        g = _pgcd([(a - b) % p for a, b in zip_pad(xe, x, p)], f, p)
        if len(g) - 1 > 0:
            return False
    return True


def zip_pad(f, g, p):
    n = max(len(f), len(g))
    return zip(f + [0] * (n - len(f)), g + [0] * (n - len(g)))


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_TABLE_LIMIT = 1 << 16  # build log/exp tables for extensions up to this size


class Field:
    """GF(p^k) with elements encoded as ints in range(p**k).

    ``modulus`` is the ascending coefficient list of a monic degree-k
    irreducible over GF(p) (length k+1); pass None for the deterministic AUTO
    choice (smallest monic irreducible in the base-p encoding order).  k = 1
    takes no modulus.
    """

    def __init__(self, p: int, k: int = 1, modulus: list[int] | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"p = {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            if modulus is not None:
                raise FieldError("k = 1 uses no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = _auto_modulus(p, k)
            modulus = [c % p for c in modulus]
            if len(_ptrim(list(modulus))) - 1 != k or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {k}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
            self.modulus = list(modulus)
        self._exp = None
        self._log = None
        if k > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()
        self._embed_roots: dict[tuple, int] = {}

    # -- construction / inspection -------------------------------------

    def element(self, coeffs) -> int:
        """Encode an int (reduced mod p when k = 1, mod q otherwise taken as
        already-encoded) or a coefficient list."""
        if isinstance(coeffs, int):
            if self.k == 1:
                return coeffs % self.p
            if 0 <= coeffs < self.q:
                return coeffs
            raise FieldError(f"{coeffs} is not an encoded element of GF({self.p}^{self.k})")
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.k:
            raise FieldError(f"coefficient list longer than degree {self.k}")
        val = 0
        for c in reversed(cs):
            val = val * self.p + c
        return val

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(p^k)."""
        return n % self.p

    def coeffs(self, a: int) -> list[int]:
        """Length-k coefficient vector of a, residues in [0, p)."""
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self):
        return range(self.q)

    def random(self, rng) -> int:
        return rng.randrange(self.q)

    def random_nonzero(self, rng) -> int:
        return rng.randrange(1, self.q)

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += (ra + rb) % p * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            a, ra = divmod(a, p)
            out += (-ra) % p * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        fa = _ptrim(self.coeffs(a))
        fb = _ptrim(self.coeffs(b))
        return self.element(_pmulmod(fa, fb, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- embeddings ------------------------------------------------------

    def embed(self, a: int, target: "Field") -> int:
        """Ring-homomorphic image of a in a larger field of the same
        characteristic (target degree a multiple of ours)."""
        if target.p != self.p:
            raise CharacteristicMismatch(f"GF({self.p}^{self.k}) into GF({target.p}^{target.k})")
        if target.k % self.k != 0:
            raise FieldError(f"no embedding GF({self.p}^{self.k}) -> GF({target.p}^{target.k})")
        if self.k == 1:
            return a  # constant polynomial; encodings agree
        if self is target or (target.k == self.k and target.modulus == self.modulus):
            return a
        root = self._embedding_root(target)
        out = 0
        for c in reversed(self.coeffs(a)):
            out = target.add(target.mul(out, root), c)
        return out

    def _embedding_root(self, target: "Field") -> int:
        key = (target.p, target.k, tuple(target.modulus or ()))
        if key not in self._embed_roots:
            for cand in range(target.q):  # smallest root: deterministic embedding
                acc = 0
                for c in reversed(self.modulus):
                    acc = target.add(target.mul(acc, cand), c)
                if acc == 0:
                    self._embed_roots[key] = cand
                    break
            else:
                raise FieldError("modulus has no root in target; not a subfield")
        return self._embed_roots[key]

    # -- misc ------------------------------------------------------------

    def _build_tables(self):
        for g in range(2, self.q):
            seen = 1
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                fa = _ptrim(self.coeffs(x))
                fg = _ptrim(self.coeffs(g))
                x = self.element(_pmulmod(fa, fg, self.modulus, self.p))
                seen += 1
                if seen > self.q:
                    raise FieldError("element order overflow; modulus not irreducible?")
            if seen == self.q - 1:
                self._exp = exp
                log = [0] * self.q
                for i, v in enumerate(exp):
                    log[v] = i
                self._log = log
                return
        raise FieldError("no multiplicative generator found")

    def format_element(self, a: int) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs(a)) + "]"

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise FieldError(f"bad field element literal {text!r}")
        body = text[1:-1].strip()
        cs = [int(t) for t in body.split(",")] if body else []
        return self.element(cs)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, tuple(self.modulus or ())))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; {self.modulus})"


def _auto_modulus(p: int, k: int) -> list[int]:
    # Smallest monic degree-k polynomial (base-p encoding of the low
    # coefficients) that is irreducible; deterministic across runs.
    for enc in range(p**k):
        low = []
        v = enc
        for _ in range(k):
            v, r = divmod(v, p)
            low.append(r)
        cand = low + [1]
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible degree-{k} polynomial over GF({p})")  # unreachable


def field_new(p: int, k: int = 1, modulus: list[int] | None = None) -> Field:
    """Construct GF(p^k); modulus=None means the AUTO (smallest) choice."""
    return Field(p, k, modulus)
