"""Line partitions over field extensions, and the Frobenius piece map.

A line over an extension of F_q is classified by how its Frobenius orbit
spreads out: either the orbit span has dimension j (class j), or — in the
symplectic refinement — the line first pairs nontrivially with its j-th
Frobenius translate.  The general piece map iterates refinement against the
inverse Frobenius image and records one (subset, element) step per round.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..coxeter import identity_twist
from ..sequences import TSeq, _next_subset
from . import kernels
from .flags import (
    PartialFlag,
    Subspace,
    enumerate_subspaces,
    flag_PQ,
    frobenius_flag,
    pos_flags,
    sum_spaces,
    weyl_group,
)
from .gf import FqField


def _frob_exponent(field: FqField, q: int) -> int:
    """e with q = p^e; the F_q-Frobenius on this field is x -> x^(p^e)."""
    e, t = 0, 1
    while t < q:
        t *= field.p
        e += 1
    if t != q or e == 0:
        raise ValueError(
            "q must be a positive power of the field characteristic")
    if field.k % e:
        raise ValueError("the coefficient field is not an extension of F_q")
    return e


def enumerate_lines(field: FqField, n: int):
    """All 1-dimensional subspaces of F^n, deterministic order."""
    return enumerate_subspaces(field, n, 1)


def gl_line_class(L: Subspace, q: int) -> int:
    """Dimension of the span of the F_q-Frobenius orbit of the line."""
    if L.dim != 1:
        raise ValueError("expected a line")
    e = _frob_exponent(L.field, q)
    s = L
    while True:
        bigger = sum_spaces(s, s.frobenius(e))
        if bigger.dim == s.dim:
            return s.dim
        s = bigger


def dl_piece(Q: PartialFlag, q: int) -> TSeq:
    """The stabilized sequence attached to a flag under the F_q-Frobenius:
    each round records the relative position of the Frobenius image, then
    refines against the inverse image until the type stops dropping."""
    field = Q.field
    e = _frob_exponent(field, q)
    group = weyl_group(Q.n)
    eps = identity_twist(group)
    base = Q.type_subset()
    qn, Jn = Q, base
    steps = []
    for _ in range(len(base) + 2):
        w = pos_flags(frobenius_flag(qn, e), qn)
        steps.append((Jn, w))
        nxt = _next_subset(group, eps, Jn, w)
        if nxt == Jn:
            return TSeq(group, eps, base, tuple(steps), True)
        qn = flag_PQ(qn, frobenius_flag(qn, -e))
        if qn.type_subset() != nxt:
            raise RuntimeError("refined flag type disagrees with the "
                               "subset recurrence")
        Jn = nxt
    raise RuntimeError("piece iteration failed to stabilize")


@dataclass(frozen=True)
class SymplecticSpace:
    """An even-dimensional space with a fixed nondegenerate alternating
    form, given by its Gram matrix."""

    field: FqField
    dim: int
    gram: tuple

    def __post_init__(self):
        g = self.gram
        if self.dim % 2 or len(g) != self.dim \
                or any(len(r) != self.dim for r in g):
            raise ValueError("need an even-dimensional square Gram matrix")
        f = self.field
        for i in range(self.dim):
            if g[i][i] != 0:
                raise ValueError("form must be alternating")
            for j in range(self.dim):
                if g[i][j] != f.neg(g[j][i]):
                    raise ValueError("form must be skew-symmetric")
        if kernels.mat_inv(g, f) is None:
            raise ValueError("form must be nondegenerate")

    def form(self, x, y):
        f = self.field
        total = 0
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.gram[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    total = f.add(total, f.mul(xi, f.mul(row[j], yj)))
        return total

    def is_isotropic(self, s: Subspace) -> bool:
        return all(self.form(x, y) == 0 for x in s.rows for y in s.rows)


def standard_symplectic(field: FqField, half: int) -> SymplecticSpace:
    """Gram matrix [[0, I], [-I, 0]] on a 2*half-dimensional space."""
    n2 = 2 * half
    gram = [[0] * n2 for _ in range(n2)]
    for i in range(half):
        gram[i][half + i] = 1
        gram[half + i][i] = field.neg(1)
    return SymplecticSpace(field, n2, tuple(tuple(r) for r in gram))


def sp_line_class(L: Subspace, V: SymplecticSpace, q: int):
    """Tag ("X", j) when the Frobenius-orbit span is isotropic of
    dimension j; otherwise ("X'", j) with j the first step at which the
    line pairs nontrivially with its Frobenius translate."""
    if L.dim != 1 or L.n != V.dim or L.field is not V.field:
        raise ValueError("expected a line inside the symplectic space")
    e = _frob_exponent(L.field, q)
    s = L
    while True:
        bigger = sum_spaces(s, s.frobenius(e))
        if bigger.dim == s.dim:
            break
        s = bigger
    if V.is_isotropic(s):
        return ("X", s.dim)
    f = L.field
    v = L.rows[0]
    cur = v
    for j in range(1, f.k // e):
        cur = tuple(f.frob(x, e) for x in cur)
        if V.form(v, cur) != 0:
            return ("X'", j)
    raise RuntimeError("non-isotropic orbit span with no pairing step")
