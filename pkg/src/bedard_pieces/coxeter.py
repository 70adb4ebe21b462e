"""Finite Coxeter groups with ShortLex-canonical reduced words.

Elements are enumerated breadth-first through the exact integer action on
root vectors, so the canonical word of an element is the ShortLex-least
reduced word under the declared generator order (generators are numbered
0..rank-1).  Length, descents, minimal coset representatives and twisted
conjugation are all index-chasing on precomputed tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanType, RootSystem, UnknownType, root_system

DEFAULT_CAP = 200_000


class CapExceeded(RuntimeError):
    """Enumeration found more elements than the configured cap allows."""


class NotSimple(ValueError):
    """A conjugate w s w^-1 required to be a simple reflection is not one."""


class TwistNotSimpleOnSubset(ValueError):
    """A twist was asked to act on a subset it does not map into the
    generator set."""


@dataclass(frozen=True)
class CoxeterPresentation:
    """Generators 0..rank-1 plus the symmetric matrix of pairwise orders."""

    coxeter_matrix: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.coxeter_matrix)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    def __post_init__(self):
        m = self.coxeter_matrix
        n = len(m)
        for i in range(n):
            if len(m[i]) != n or m[i][i] != 1:
                raise ValueError("coxeter matrix must be square with unit diagonal")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("coxeter matrix must be symmetric")
                if i != j and m[i][j] not in (2, 3, 4, 6):
                    raise UnknownType(
                        f"bond order {m[i][j]} is outside the crystallographic families")


class Element:
    """A group element; compares and sorts by ShortLex canonical word."""

    __slots__ = ("group", "idx")

    def __init__(self, group: "Group", idx: int):
        self.group = group
        self.idx = idx

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.words[self.idx]

    @property
    def length(self) -> int:
        return self.group.lengths[self.idx]

    def __mul__(self, other: "Element") -> "Element":
        return self.group.mul(self, other)

    def inv(self) -> "Element":
        return self.group.inv(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and other.group is self.group
                and other.idx == self.idx)

    def __hash__(self) -> int:
        return hash((id(self.group), self.idx))

    def __lt__(self, other: "Element") -> bool:
        if other.group is not self.group:
            raise ValueError("cannot compare elements of different groups")
        return self.idx < other.idx

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.word)

    def __repr__(self) -> str:
        return f"<{str(self) or 'e'}>"


def _mat_mul(a, b):
    n = len(a)
    rng = range(n)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in rng) for j in rng)
                 for i in rng)


class Group:
    """An enumerated finite Coxeter group.

    `words` lists canonical words in ShortLex order (index 0 is the
    identity), `right[e][i]` / `left[e][i]` are the indices of w*s_i and
    s_i*w, and the descent sets are kept as bitmasks over generators.
    """

    def __init__(self, pres: CoxeterPresentation, rootsys: RootSystem,
                 cap: int = DEFAULT_CAP, name: str | None = None):
        self.pres = pres
        self.rootsys = rootsys
        self.rank = pres.rank
        self.name = name
        self._enumerate(cap)

    # -- construction -------------------------------------------------

    @staticmethod
    @lru_cache(maxsize=None)
    def _from_type_cached(name: str, cap: int) -> "Group":
        rs = root_system(name)
        ct = rs.cartan_type
        from .cartan import coxeter_matrix
        pres = CoxeterPresentation(coxeter_matrix(ct))
        return Group(pres, rs, cap, name=ct.name)

    @staticmethod
    def from_type(name: str, cap: int = DEFAULT_CAP) -> "Group":
        return Group._from_type_cached(CartanType.parse(name).name, cap)

    def _enumerate(self, cap: int):
        rank = self.rank
        cartan = self.rootsys.cartan
        gen_mats = []
        for i in range(rank):
            m = [[1 if k == j else 0 for j in range(rank)] for k in range(rank)]
            for j in range(rank):
                m[i][j] -= cartan[i][j]
            gen_mats.append(tuple(tuple(row) for row in m))
        ident = tuple(tuple(1 if k == j else 0 for j in range(rank))
                      for k in range(rank))

        index = {ident: 0}
        mats = [ident]
        words: list[tuple[int, ...]] = [()]
        frontier = [0]
        while frontier:
            nxt = []
            for e in frontier:
                me = mats[e]
                for i in range(rank):
                    col = [me[k][i] for k in range(rank)]
                    if any(c < 0 for c in col):
                        continue  # descent: w s_i is shorter
                    child = _mat_mul(me, gen_mats[i])
                    if child not in index:
                        if len(mats) >= cap:
                            raise CapExceeded(
                                f"more than {cap} elements; raise the cap if "
                                "the group really is this large")
                        index[child] = len(mats)
                        mats.append(child)
                        words.append(words[e] + (i,))
                        nxt.append(index[child])
            frontier = nxt

        order = len(mats)
        self.order = order
        self.words = words
        self.lengths = [len(w) for w in words]
        right = [[0] * rank for _ in range(order)]
        for e in range(order):
            me = mats[e]
            for i in range(rank):
                right[e][i] = index[_mat_mul(me, gen_mats[i])]
        self.right = right

        inv_idx = [0] * order
        for e in range(order):
            j = 0
            for i in reversed(words[e]):
                j = right[j][i]
            inv_idx[e] = j
        self.inv_idx = inv_idx

        left = [[0] * rank for _ in range(order)]
        for e in range(order):
            ei = inv_idx[e]
            for i in range(rank):
                left[e][i] = inv_idx[right[ei][i]]
        self.left = left

        lengths = self.lengths
        self.rmask = [sum(1 << i for i in range(rank)
                          if lengths[right[e][i]] < lengths[e])
                      for e in range(order)]
        self.lmask = [sum(1 << i for i in range(rank)
                          if lengths[left[e][i]] < lengths[e])
                      for e in range(order)]
        self._elements = [Element(self, e) for e in range(order)]

    # -- basic access --------------------------------------------------

    @property
    def identity(self) -> Element:
        return self._elements[0]

    def generator(self, i: int) -> Element:
        return self._elements[self.right[0][i]]

    def elements(self) -> list[Element]:
        """All elements in ShortLex order."""
        return list(self._elements)

    def element(self, word) -> Element:
        """Canonicalize an arbitrary word (any iterable of generator indices)."""
        j = 0
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"generator index {i} out of range")
            j = self.right[j][i]
        return self._elements[j]

    def parse(self, text: str) -> Element:
        """Parse a space-separated word like "1 0"; "" is the identity."""
        text = text.strip()
        return self.element(tuple(int(t) for t in text.split()) if text else ())

    @property
    def longest(self) -> Element:
        return self._elements[-1]

    # -- arithmetic -----------------------------------------------------

    def _check(self, w: Element):
        if w.group is not self:
            raise ValueError("element belongs to a different group")

    def mul(self, u: Element, v: Element) -> Element:
        self._check(u)
        self._check(v)
        j = u.idx
        for i in self.words[v.idx]:
            j = self.right[j][i]
        return self._elements[j]

    def inv(self, w: Element) -> Element:
        self._check(w)
        return self._elements[self.inv_idx[w.idx]]

    def product(self, ws) -> Element:
        out = self.identity
        for w in ws:
            out = self.mul(out, w)
        return out

    # -- subsets of generators -------------------------------------------

    def subset_mask(self, J) -> int:
        mask = 0
        for i in J:
            if not 0 <= i < self.rank:
                raise ValueError(f"generator index {i} out of range")
            mask |= 1 << i
        return mask

    @staticmethod
    def mask_subset(mask: int) -> frozenset[int]:
        out, i = [], 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return frozenset(out)

    def descents(self, w: Element) -> tuple[frozenset[int], frozenset[int]]:
        """(left descents, right descents) of w."""
        self._check(w)
        return (self.mask_subset(self.lmask[w.idx]),
                self.mask_subset(self.rmask[w.idx]))

    def is_min_rep(self, K, w: Element, J) -> bool:
        """Is w the minimal representative of W_K w W_J, i.e. in ^K W^J?"""
        self._check(w)
        return (self.lmask[w.idx] & self.subset_mask(K) == 0
                and self.rmask[w.idx] & self.subset_mask(J) == 0)

    def min_double_coset(self, K, w: Element, J) -> Element:
        """The unique shortest element of the double coset W_K w W_J."""
        self._check(w)
        kmask = self.subset_mask(K)
        jmask = self.subset_mask(J)
        idx = w.idx
        while True:
            m = self.lmask[idx] & kmask
            if m:
                idx = self.left[idx][(m & -m).bit_length() - 1]
                continue
            m = self.rmask[idx] & jmask
            if m:
                idx = self.right[idx][(m & -m).bit_length() - 1]
                continue
            return self._elements[idx]

    def enumerate_min_reps(self, K, J) -> list[Element]:
        """All of ^K W^J in ShortLex order."""
        kmask = self.subset_mask(K)
        jmask = self.subset_mask(J)
        return [self._elements[e] for e in range(self.order)
                if not (self.lmask[e] & kmask) and not (self.rmask[e] & jmask)]

    def subgroup_elements(self, J) -> list[Element]:
        """The standard parabolic subgroup W_J, in ShortLex order.

        The set of generators appearing in a reduced word is independent
        of the word, so a support filter on canonical words is exact.
        """
        jset = frozenset(J)
        self.subset_mask(jset)  # bounds check
        return [w for w in self._elements if set(self.words[w.idx]) <= jset]

    # -- conjugation ------------------------------------------------------

    def conj_gen(self, w: Element, s: int) -> Element:
        """w s w^-1 as an element."""
        self._check(w)
        j = self.right[w.idx][s]
        for i in self.words[self.inv_idx[w.idx]]:
            j = self.right[j][i]
        return self._elements[j]

    def ad_subset(self, w: Element, J, strict: bool = False) -> frozenset[int]:
        """Generators s' with s' = w s w^-1 for some s in J.

        Conjugates that are not simple reflections are dropped, unless
        strict is set, in which case they raise NotSimple.
        """
        out = []
        for s in sorted(J):
            t = self.conj_gen(w, s)
            if t.length == 1:
                out.append(t.word[0])
            elif strict:
                raise NotSimple(
                    f"w s{s} w^-1 has length {t.length} for w = {w!r}")
        return frozenset(out)

    def ad_orbit(self, w: Element, J) -> frozenset[Element]:
        """The set {w s w^-1 : s in J} without any simplicity requirement."""
        return frozenset(self.conj_gen(w, s) for s in J)

    def __repr__(self):
        label = self.name or "?"
        return f"Group({label}, order={self.order})"


class Twist:
    """An automorphism of the group given by its values on the generators.

    Validation checks that the images satisfy the defining relations
    (pairwise products have the right orders) and that the induced
    endomorphism is a bijection.  Images need not be simple reflections;
    restriction to a generator subset is only defined when they are, and
    `on_subset` raises otherwise.
    """

    __slots__ = ("group", "images", "name", "_cache")

    def __init__(self, group: Group, images, name: str | None = None,
                 validate: bool = True):
        self.group = group
        imgs = tuple(images)
        if len(imgs) != group.rank:
            raise ValueError("need one image per generator")
        for w in imgs:
            group._check(w)
        self.images = imgs
        self.name = name or ";".join(str(w) for w in imgs)
        self._cache: dict[int, int] = {0: 0}
        if validate:
            self._validate()

    def _validate(self):
        g = self.group
        m = g.pres.coxeter_matrix
        for i in range(g.rank):
            for j in range(i, g.rank):
                p = g.mul(self.images[i], self.images[j])
                order, x = 1, p
                while x.idx != 0:
                    x = g.mul(x, p)
                    order += 1
                    if order > 12:
                        break
                want = 1 if i == j else m[i][j]
                if order != want:
                    raise ValueError(
                        f"images of generators {i},{j} have product of order "
                        f"{order}, expected {want}")
        seen = {self(w).idx for w in g.elements()}
        if len(seen) != g.order:
            raise ValueError("generator images do not induce a bijection")

    def __call__(self, w: Element) -> Element:
        self.group._check(w)
        idx = self._cache.get(w.idx)
        if idx is None:
            out = self.group.product(self.images[i] for i in w.word)
            self._cache[w.idx] = idx = out.idx
        return self.group._elements[idx]

    def on_subset(self, J) -> frozenset[int]:
        """Image of a generator subset, as generator indices."""
        out = []
        for s in sorted(J):
            w = self.images[s]
            if w.length != 1:
                raise TwistNotSimpleOnSubset(
                    f"twist sends generator {s} to the non-simple element {w!r}")
            out.append(w.word[0])
        return frozenset(out)

    def image_set(self, J) -> frozenset[Element]:
        """{eps(s) : s in J} as elements, with no simplicity requirement."""
        return frozenset(self.images[s] for s in J)

    @property
    def is_identity(self) -> bool:
        return all(w.idx == self.group.right[0][i]
                   for i, w in enumerate(self.images))

    def __repr__(self):
        return f"Twist({self.name})"


def identity_twist(group: Group) -> Twist:
    return Twist(group, [group.generator(i) for i in range(group.rank)],
                 name="id", validate=False)


def diagram_automorphisms(group: Group) -> list[Twist]:
    """All twists induced by symmetries of the Coxeter diagram.

    The identity comes first; the rest are ordered by their permutation of
    the generators.  Found by brute force over generator permutations,
    which is fine at the ranks this package targets.
    """
    from itertools import permutations

    m = group.pres.coxeter_matrix
    n = group.rank
    out = [identity_twist(group)]
    for perm in sorted(permutations(range(n))):
        if all(perm[i] == i for i in range(n)):
            continue
        if all(m[perm[i]][perm[j]] == m[i][j]
               for i in range(n) for j in range(n)):
            name = ",".join(str(perm[i]) for i in range(n))
            out.append(Twist(group, [group.generator(perm[i]) for i in range(n)],
                             name=name, validate=False))
    return out


def flip_twist(group: Group) -> Twist:
    """The unique nontrivial diagram automorphism, when there is exactly one."""
    autos = diagram_automorphisms(group)
    if len(autos) != 2:
        raise ValueError(
            f"group has {len(autos) - 1} nontrivial diagram automorphisms; "
            "specify the twist explicitly")
    return autos[1]


def enumerate_group(spec, cap: int = DEFAULT_CAP) -> Group:
    """Build a group from a type name ("B3", "A2xA1") or a presentation."""
    if isinstance(spec, str):
        return Group.from_type(spec, cap)
    if isinstance(spec, CoxeterPresentation):
        return _group_from_presentation(spec, cap)
    raise TypeError("expected a type name or a CoxeterPresentation")


def _group_from_presentation(pres: CoxeterPresentation, cap: int) -> Group:
    # Pick any crystallographic root realization compatible with the bond
    # orders; the group does not depend on the choice of orientation.
    n = pres.rank
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    split = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}
    for i in range(n):
        for j in range(i + 1, n):
            cartan[i][j], cartan[j][i] = split[pres.coxeter_matrix[i][j]]
    rs = RootSystem(tuple(tuple(row) for row in cartan))
    return Group(pres, rs, cap)
