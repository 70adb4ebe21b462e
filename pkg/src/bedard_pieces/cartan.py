"""Cartan types and crystallographic root systems over exact integers.

Types are products of irreducible families A..G, written like "B3" or
"A2xA1".  Diagram nodes are numbered 0..rank-1, chains left to right; for
B/C the double bond sits between the last two nodes (last node short in B,
long in C), for D the fork is at the high end, and E types follow the
usual numbering with the branch node at index 3.

Roots are stored as integer coordinate vectors in the simple-root basis,
so every reflection acts by exact integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache


class UnknownType(ValueError):
    """Raised for a Cartan type string outside the supported families."""


_RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (2, None),
                "D": (3, None), "E": (6, 8), "F": (4, 4), "G": (2, 2)}


@dataclass(frozen=True)
class CartanType:
    """A product of irreducible components, e.g. (("A", 2), ("A", 1))."""

    components: tuple[tuple[str, int], ...]

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    @property
    def name(self) -> str:
        return "x".join(f"{fam}{n}" for fam, n in self.components)

    @staticmethod
    def parse(name: str) -> "CartanType":
        comps = []
        for part in name.strip().split("x"):
            m = re.fullmatch(r"([A-Ga-g])(\d+)", part.strip())
            if not m:
                raise UnknownType(f"cannot parse Cartan type {name!r}")
            fam, n = m.group(1).upper(), int(m.group(2))
            lo, hi = _RANK_BOUNDS[fam]
            if n < lo or (hi is not None and n > hi):
                raise UnknownType(f"rank {n} out of range for family {fam}")
            comps.append((fam, n))
        if not comps:
            raise UnknownType(f"empty Cartan type {name!r}")
        return CartanType(tuple(comps))


def _irreducible_cartan(fam: str, n: int) -> list[list[int]]:
    # C[i][j] is the coefficient in s_i(a_j) = a_j - C[i][j] a_i.
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if fam == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif fam in ("B", "C"):
        for i in range(n - 2):
            bond(i, i + 1)
        # B: last simple root short; C: last simple root long.
        if fam == "B":
            bond(n - 2, n - 1, -1, -2)
        else:
            bond(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "G":
        bond(0, 1, -1, -3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif fam == "E":
        # Branch node is 3; node 1 hangs off it.
        edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        for i, j in edges:
            bond(i, j)
    else:  # pragma: no cover - parse() screens families
        raise UnknownType(fam)
    return C


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Block-diagonal Cartan matrix of a (possibly reducible) type."""
    rank = ct.rank
    C = [[0] * rank for _ in range(rank)]
    off = 0
    for fam, n in ct.components:
        block = _irreducible_cartan(fam, n)
        for i in range(n):
            for j in range(n):
                C[off + i][off + j] = block[i][j]
        off += n
    return tuple(tuple(row) for row in C)


_BOND_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def coxeter_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """m(i,j) read off the Cartan matrix: C_ij*C_ji in {0,1,2,3}."""
    C = cartan_matrix(ct)
    rank = ct.rank
    m = [[1 if i == j else _BOND_ORDER[C[i][j] * C[j][i]]
          for j in range(rank)] for i in range(rank)]
    return tuple(tuple(row) for row in m)


class RootSystem:
    """All roots of a generalized Cartan matrix, closed under reflections.

    Roots are integer tuples in the simple-root basis.  `simple_perm[i]`
    gives the permutation of root indices induced by s_i, so words act by
    chasing indices rather than redoing linear algebra.  Only matrices of
    finite type terminate; use `root_system` for the named families.
    """

    def __init__(self, cartan: tuple[tuple[int, ...], ...],
                 cartan_type: CartanType | None = None):
        self.cartan_type = cartan_type
        self.rank = len(cartan)
        self.cartan = cartan
        simples = [tuple(1 if j == i else 0 for j in range(self.rank))
                   for i in range(self.rank)]
        index: dict[tuple[int, ...], int] = {}
        roots: list[tuple[int, ...]] = []
        for a in simples:
            index[a] = len(roots)
            roots.append(a)
        frontier = list(simples)
        while frontier:
            nxt = []
            for a in frontier:
                for i in range(self.rank):
                    b = self._reflect(i, a)
                    if b not in index:
                        index[b] = len(roots)
                        roots.append(b)
                        nxt.append(b)
            frontier = nxt
        self.roots = tuple(roots)
        self.index = index
        self.positive = tuple(all(c >= 0 for c in a) for a in roots)
        self.num_positive = sum(self.positive)
        self.simple_perm = tuple(
            tuple(index[self._reflect(i, a)] for a in roots)
            for i in range(self.rank))
        # support[r]: set of simple indices appearing in the root.
        self.support = tuple(
            frozenset(j for j, c in enumerate(a) if c) for a in roots)

    def _reflect(self, i: int, a: tuple[int, ...]) -> tuple[int, ...]:
        c = sum(self.cartan[i][j] * a[j] for j in range(self.rank))
        return tuple(a[j] - (c if j == i else 0) for j in range(self.rank))

    def act_word(self, word, root_idx: int) -> int:
        """Apply s_{word[0]} ... s_{word[-1]} to a root, leftmost outermost."""
        for i in reversed(word):
            root_idx = self.simple_perm[i][root_idx]
        return root_idx

    def positive_indices(self):
        return tuple(r for r in range(len(self.roots)) if self.positive[r])


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    ct = CartanType.parse(name)
    return RootSystem(cartan_matrix(ct), ct)
