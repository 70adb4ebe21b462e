"""Table-driven arithmetic for F_{p^k}, p in {2, 3, 5}, k <= 4.

Elements are integers 0 .. p^k - 1 encoding polynomials in the generator t:
the element sum(c_i t^i) is stored as sum(c_i p^i) (base-p digits, lowest
degree first).  In particular 0 and 1 are the field's zero and one, and for
prime fields the encoding is the usual residue.

The modulus is the FIRST monic irreducible polynomial of degree k when
candidates x^k + a_{k-1}x^{k-1} + ... + a_0 are ordered by the integer
sum(a_i p^i).  This makes serialized matrices stable across runs and
versions.  Concretely: F_4 uses x^2+x+1, F_8 uses x^3+x+1, F_9 uses x^2+1,
F_25 uses x^2+2.
"""

from __future__ import annotations

from functools import lru_cache

CHARACTERISTICS = (2, 3, 5)
MAX_DEGREE = 4


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    while len(a) >= len(m):
        c = a[-1]
        if c:
            shift = len(a) - len(m)
            for i, cm in enumerate(m):
                a[shift + i] = (a[shift + i] - c * cm) % p
        a.pop()
    return _poly_trim(a)


def _monic_polys(p, deg):
    """All monic polynomials of the given degree, ordered by the base-p
    encoding of their lower coefficients."""
    for code in range(p ** deg):
        tail, c = [], code
        for _ in range(deg):
            tail.append(c % p)
            c //= p
        yield tail + [1]


def _is_irreducible(m, p):
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(m, f, p):
                return False
    return True


def _first_irreducible(p, k):
    for m in _monic_polys(p, k):
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")


class FqField:
    """One finite field with fully precomputed operation tables."""

    __slots__ = ("p", "k", "q", "modulus", "add_t", "mul_t", "neg_t",
                 "inv_t", "frob_t")

    def __init__(self, p: int, k: int):
        if p not in CHARACTERISTICS:
            raise ValueError(f"characteristic must be one of "
                             f"{CHARACTERISTICS}, got {p}")
        if not 1 <= k <= MAX_DEGREE:
            raise ValueError(f"extension degree must be 1..{MAX_DEGREE}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = _first_irreducible(p, k) if k > 1 else (0, 1)

        def decode(e):
            out = []
            for _ in range(k):
                out.append(e % p)
                e //= p
            return _poly_trim(out)

        def encode(poly):
            return sum(c * p ** i for i, c in enumerate(poly))

        q = self.q
        polys = [decode(e) for e in range(q)]
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = polys[a]
            for b in range(a, q):
                pb = polys[b]
                n = max(len(pa), len(pb))
                s = [( (pa[i] if i < len(pa) else 0)
                       + (pb[i] if i < len(pb) else 0)) % p for i in range(n)]
                v = encode(_poly_trim(s))
                add[a][b] = add[b][a] = v
                w = encode(_poly_mod(_poly_mul(pa, pb, p), self.modulus, p))
                mul[a][b] = mul[b][a] = w
        self.add_t = tuple(tuple(r) for r in add)
        self.mul_t = tuple(tuple(r) for r in mul)
        self.neg_t = tuple(encode([(-c) % p for c in polys[a]])
                           for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.mul_t[a].index(1)
        self.inv_t = tuple(inv)
        frob = [a for a in range(q)]
        for a in range(q):
            x = a
            for _ in range(p - 1):
                x = self.mul_t[x][a]
            frob[a] = x
        self.frob_t = tuple(frob)

    # -- scalar operations -------------------------------------------------

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverting 0 in a finite field")
        return self.inv_t[a]

    def frob(self, a, times: int = 1):
        """Apply x -> x^p the given number of times (mod k; negatives ok)."""
        for _ in range(times % self.k):
            a = self.frob_t[a]
        return a

    def pow(self, a, e: int):
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul_t[out][base]
            base = self.mul_t[base][base]
            e >>= 1
        return out

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(q: int) -> FqField:
    """The field with q elements; q = p^k, p in {2,3,5}, k <= 4."""
    for p in CHARACTERISTICS:
        k = 0
        n = q
        while n % p == 0:
            n //= p
            k += 1
        if n == 1 and k >= 1:
            return FqField(p, k)
    raise ValueError(f"{q} is not a supported prime power")
