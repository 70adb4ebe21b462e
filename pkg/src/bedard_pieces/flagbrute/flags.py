"""Subspaces, partial flags, relative position, and the P^Q construction.

Vectors are row tuples of field codes; the group acts on column vectors,
so a matrix g moves a subspace with row basis B to row space of B g^T.
A partial flag of signature (d_1 < ... < d_s) in dimension n corresponds
to the generator subset J = {i in 0..n-2 : i+1 is not a jump dimension}
of the symmetric group W(A_{n-1}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..coxeter import Element, Group
from . import kernels
from .gf import FqField


class DimensionMismatch(ValueError):
    """Operands live in different ambient spaces or fields."""


@lru_cache(maxsize=None)
def weyl_group(n: int) -> Group:
    if n < 2:
        raise ValueError("need ambient dimension at least 2")
    return Group.from_type(f"A{n - 1}")


@dataclass(frozen=True)
class Subspace:
    field: FqField
    n: int
    rows: tuple  # canonical RREF basis, zero rows dropped

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __le__(self, other: "Subspace") -> bool:
        _same_space(self, other)
        stacked = kernels.rref(self.rows + other.rows, self.field)
        return len(stacked) == other.dim

    def transform(self, g) -> "Subspace":
        """Image under the invertible matrix g (column-vector action)."""
        gt = tuple(zip(*g))
        return Subspace(self.field, self.n,
                        kernels.rref(kernels.mat_mul(self.rows, gt,
                                                     self.field), self.field))

    def frobenius(self, times: int = 1) -> "Subspace":
        f = self.field
        rows = tuple(tuple(f.frob(x, times) for x in r) for r in self.rows)
        return Subspace(f, self.n, kernels.rref(rows, f))


def span(field: FqField, n: int, vectors) -> Subspace:
    return Subspace(field, n, kernels.rref(tuple(tuple(v) for v in vectors),
                                           field))


def zero_space(field: FqField, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FqField, n: int) -> Subspace:
    return Subspace(field, n,
                    tuple(tuple(1 if i == j else 0 for j in range(n))
                          for i in range(n)))


def _same_space(a: Subspace, b: Subspace):
    if a.field is not b.field or a.n != b.n:
        raise DimensionMismatch("subspaces live in different spaces")


def sum_spaces(a: Subspace, b: Subspace) -> Subspace:
    _same_space(a, b)
    return Subspace(a.field, a.n, kernels.rref(a.rows + b.rows, a.field))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: echelonize [A|A; B|0]; rows with zero left half carry an
    intersection basis in their right half."""
    _same_space(a, b)
    n = a.n
    stacked = tuple(r + r for r in a.rows) \
        + tuple(r + (0,) * n for r in b.rows)
    ech = kernels.rref(stacked, a.field)
    inter = tuple(r[n:] for r in ech if not any(r[:n]))
    return Subspace(a.field, n, kernels.rref(inter, a.field))


@dataclass(frozen=True)
class PartialFlag:
    field: FqField
    n: int
    spaces: tuple  # strictly increasing proper nonzero Subspaces

    def __post_init__(self):
        d = 0
        for s in self.spaces:
            if s.n != self.n or s.field is not self.field:
                raise DimensionMismatch("flag member in wrong space")
            if not s.dim > d:
                raise ValueError("flag dimensions must strictly increase")
            d = s.dim
        if self.spaces and self.spaces[-1].dim >= self.n:
            raise ValueError("flag members must be proper subspaces")

    @property
    def signature(self) -> tuple:
        return tuple(s.dim for s in self.spaces)

    def type_subset(self) -> frozenset:
        return type_of_signature(self.n, self.signature)

    def chain(self) -> tuple:
        """The flag with both endpoints attached."""
        return (zero_space(self.field, self.n),) + self.spaces \
            + (full_space(self.field, self.n),)

    def transform(self, g) -> "PartialFlag":
        return PartialFlag(self.field, self.n,
                           tuple(s.transform(g) for s in self.spaces))


def type_of_signature(n: int, signature) -> frozenset:
    sig = set(signature)
    if not all(0 < d < n for d in sig):
        raise ValueError("jump dimensions must be strictly between 0 and n")
    return frozenset(i for i in range(n - 1) if (i + 1) not in sig)


def signature_for_type(n: int, J) -> tuple:
    J = frozenset(J)
    if not J <= set(range(n - 1)):
        raise ValueError(f"subset out of range for ambient dimension {n}")
    return tuple(d for d in range(1, n) if (d - 1) not in J)


def frobenius_flag(flag: PartialFlag, power: int = 1) -> PartialFlag:
    """Entrywise x -> x^(p^power) on every member, re-canonicalized.
    Negative powers invert the map (taken mod the field degree)."""
    return PartialFlag(flag.field, flag.n,
                       tuple(s.frobenius(power) for s in flag.spaces))


def _perm_to_element(group: Group, perm) -> Element:
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j)
                changed = True
                break
    return group.element(reversed(word))


@lru_cache(maxsize=1 << 18)
def pos_flags(f1: PartialFlag, f2: PartialFlag) -> Element:
    """Relative position: the minimal double coset representative in
    ^K W^J, K and J the types of f1 and f2.

    The rank matrix dim(V_a intersect W_b) determines, by inclusion and
    exclusion, how many basis directions of each f2 block land in each f1
    block; any permutation with those block counts lies in the right
    double coset, and the minimal representative is taken in the group.
    """
    if f1.field is not f2.field or f1.n != f2.n:
        raise DimensionMismatch("flags live in different spaces")
    n = f1.n
    ch1, ch2 = f1.chain(), f2.chain()
    r = [[intersect(a, b).dim for b in ch2] for a in ch1]
    s1, s2 = len(ch1) - 1, len(ch2) - 1
    m = [[r[a][b] - r[a - 1][b] - r[a][b - 1] + r[a - 1][b - 1]
          for b in range(1, s2 + 1)] for a in range(1, s1 + 1)]
    next_value = [ch1[a].dim for a in range(s1)]
    perm = [0] * n
    pos = 0
    for b in range(s2):
        for a in range(s1):
            for _ in range(m[a][b]):
                perm[pos] = next_value[a]
                next_value[a] += 1
                pos += 1
    group = weyl_group(n)
    elem = _perm_to_element(group, perm)
    return group.min_double_coset(f1.type_subset(), elem, f2.type_subset())


@lru_cache(maxsize=1 << 18)
def flag_PQ(fp: PartialFlag, fq: PartialFlag) -> PartialFlag:
    """The flag of (P intersect Q) U_P: the refinement of P's chain by
    V_{i-1} + (V_i intersect W_j) over all members W_j of Q's chain."""
    if fp.field is not fq.field or fp.n != fq.n:
        raise DimensionMismatch("flags live in different spaces")
    chp, chq = fp.chain(), fq.chain()
    seen = {}
    for i in range(1, len(chp)):
        below, here = chp[i - 1], chp[i]
        for w in chq:
            s = sum_spaces(below, intersect(here, w))
            seen[s.rows] = s
    parts = sorted(seen.values(), key=lambda s: s.dim)
    return PartialFlag(fp.field, fp.n,
                       tuple(s for s in parts if 0 < s.dim < fp.n))


# -- enumeration -----------------------------------------------------------

def enumerate_subspaces(field: FqField, n: int, d: int):
    """All d-dimensional subspaces of F^n as canonical RREF bases, in a
    fixed deterministic order."""
    if not 0 <= d <= n:
        raise ValueError("dimension out of range")
    if d == 0:
        return [zero_space(field, n)]
    out = []
    nonpivot_values = range(field.q)
    for pivots in itertools.combinations(range(n), d):
        free = [(i, j) for i in range(d) for j in range(n)
                if j > pivots[i] and j not in pivots]
        for values in itertools.product(nonpivot_values, repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for i in range(d):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            out.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    return out


def enumerate_flags(n: int, field: FqField, signature,
                    budget: int = 500000):
    """All partial flags with the given jump dimensions, deterministic
    order.  Raises BudgetExceeded when the count would pass the budget."""
    from .zvariety import BudgetExceeded  # cycle-free: error type only

    sig = tuple(signature)
    partial = [()]
    for d in sig:
        layer = enumerate_subspaces(field, n, d)
        new = []
        for chain in partial:
            for s in layer:
                if chain and not chain[-1] <= s:
                    continue
                new.append(chain + (s,))
                if len(new) > budget:
                    raise BudgetExceeded(
                        f"flag enumeration passed {budget}")
        partial = new
    return [PartialFlag(field, n, chain) for chain in partial]
