"""The pair variety over F_q by exhaustive enumeration.

A point is (P, gU_P): a flag of type J plus a coset of the unipotent
radical of its stabilizer.  The iterated construction pushes P' = gP and P
toward each other and reads off one (subset, element) step per round; the
resulting stabilized sequence names the piece the point belongs to.

Enumeration strategy: cosets of the standard unipotent radical U are swept
once in a fixed matrix order (so the first member met is the
lexicographically least, which doubles as the canonical label), and
transported to each flag P by a change of basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..coxeter import Group, identity_twist
from ..sequences import PieceKey, TSeq, _next_subset, enumerate_pieces
from . import kernels
from .flags import (
    PartialFlag,
    Subspace,
    enumerate_flags,
    flag_PQ,
    pos_flags,
    signature_for_type,
    weyl_group,
)
from .gf import GF, FqField

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured cap."""


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


@lru_cache(maxsize=None)
def gl_elements(field: FqField, n: int):
    """All invertible n x n matrices, ordered lexicographically by their
    flattened entries."""
    out = []
    for flat in itertools.product(range(field.q), repeat=n * n):
        mat = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if len(kernels.rref(mat, field)) == n:
            out.append(mat)
    return tuple(out)


def std_flag(field: FqField, n: int, signature) -> PartialFlag:
    rows = _identity(n)
    return PartialFlag(field, n,
                       tuple(Subspace(field, n, rows[:d]) for d in signature))


@lru_cache(maxsize=None)
def unipotent_std(field: FqField, n: int, signature):
    """The unipotent radical of the standard parabolic with the given jump
    dimensions: identity diagonal blocks, free entries above them."""
    cuts = (0,) + tuple(signature) + (n,)
    block = [0] * n
    for b in range(len(cuts) - 1):
        for i in range(cuts[b], cuts[b + 1]):
            block[i] = b
    free = [(i, j) for i in range(n) for j in range(n) if block[i] < block[j]]
    out = []
    for values in itertools.product(range(field.q), repeat=len(free)):
        mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(free, values):
            mat[i][j] = v
        out.append(tuple(tuple(r) for r in mat))
    return tuple(out)


def adapted_matrix(flag: PartialFlag):
    """An invertible h carrying the standard flag of the same signature to
    this flag (columns are a basis adapted to the chain)."""
    field, n = flag.field, flag.n
    basis = []
    for space in flag.chain()[1:]:
        for v in space.rows:
            if len(kernels.rref(tuple(basis) + (v,), field)) > len(basis):
                basis.append(v)
    return tuple(zip(*basis))


@dataclass(frozen=True)
class ZPointFq:
    """One point (P, gU_P); the label is the lexicographically least coset
    member and is the canonical witness."""

    flag: PartialFlag
    flag_p: PartialFlag
    label: tuple

    @property
    def g(self):
        return self.label


def z_piece(point, g=None, group: Group | None = None) -> TSeq:
    """The stabilized sequence classifying the point (flag, g U_flag).

    Accepts either a ZPointFq or a flag together with a witness matrix.
    """
    if isinstance(point, ZPointFq):
        flag, g = point.flag, point.label
    else:
        flag = point
        if g is None:
            raise TypeError("a witness matrix is required with a bare flag")
    field = flag.field
    if group is None:
        group = weyl_group(flag.n)
    eps = identity_twist(group)
    g_inv = kernels.mat_inv(g, field)
    if g_inv is None:
        raise ValueError("witness matrix is singular")
    base = flag.type_subset()
    p, pp = flag, flag.transform(g)
    Jn = base
    steps = []
    for _ in range(len(base) + 2):
        w = pos_flags(pp, p)
        steps.append((Jn, w))
        Jnext = _next_subset(group, eps, Jn, w)
        if Jnext == Jn:
            return TSeq(group, eps, base, tuple(steps), True)
        y = flag_PQ(pp, p)
        if y.type_subset() != Jnext:
            raise RuntimeError("refined flag type disagrees with the "
                               "subset recurrence")
        p, pp, Jn = y.transform(g_inv), y, Jnext
    raise RuntimeError("piece iteration failed to stabilize")


def theta(flag: PartialFlag, g):
    """One step of the bundle map on points: (P, gU_P) -> (P^1, gU_{P^1})
    with its canonical label.  Used to measure fibres."""
    field = flag.field
    g_inv = kernels.mat_inv(g, field)
    pp = flag.transform(g)
    y = flag_PQ(pp, flag)
    p1 = y.transform(g_inv)
    h = adapted_matrix(p1)
    h_inv = kernels.mat_inv(h, field)
    u_std = unipotent_std(field, flag.n, p1.signature)
    label = min(kernels.mat_mul(kernels.mat_mul(g, h, field),
                                kernels.mat_mul(u, h_inv, field), field)
                for u in u_std)
    return p1, label


def z_points(n: int, q: int, J, budget: int | None = None):
    """All points of the pair variety for GL_n(F_q), canonical labels
    included.  Intended for small cases; the census uses a leaner path."""
    field, group, flags, u_std, reps, _ = _census_setup(n, q, J, budget)
    points = []
    for flag in flags:
        h = adapted_matrix(flag)
        h_inv = kernels.mat_inv(h, field)
        uh = [kernels.mat_mul(u, h_inv, field) for u in u_std]
        flag_p_cache = {}
        for c in reps:
            label = min(kernels.mat_mul(c, x, field) for x in uh)
            if label not in flag_p_cache:
                flag_p_cache[label] = flag.transform(label)
            points.append(ZPointFq(flag, flag_p_cache[label], label))
    return points


def _census_setup(n: int, q: int, J, budget: int | None):
    from ..counts import ReductiveDatum, variety_count_poly

    if n < 2:
        raise ValueError("need n >= 2")
    group = weyl_group(n)
    base = frozenset(J)
    if not base <= set(range(n - 1)):
        raise ValueError(f"subset out of range for GL_{n}")
    cap = DEFAULT_BUDGET if budget is None else budget
    expected = variety_count_poly(base, ReductiveDatum(group, n))(q)
    if expected > cap:
        raise BudgetExceeded(
            f"census would enumerate {expected} points (cap {cap})")
    field = GF(q)
    signature = signature_for_type(n, base)
    flags = enumerate_flags(n, field, signature)
    u_std = unipotent_std(field, n, signature)
    # Sweep invertible matrices in lex order; the first member of each
    # U-coset met is its lexicographically least element.
    reps = []
    coset_id = {}
    for g in gl_elements(field, n):
        if g in coset_id:
            continue
        idx = len(reps)
        reps.append(g)
        for u in u_std:
            coset_id[kernels.mat_mul(g, u, field)] = idx
    return field, group, flags, u_std, reps, coset_id


def _gl_generators(field: FqField, n: int):
    """A small verified generating set of GL_n(F_q)."""
    q = field.q
    cycle = tuple(tuple(1 if j == (i + 1) % n else 0 for j in range(n))
                  for i in range(n))
    transvection = tuple(tuple(1 if i == j else (1 if (i, j) == (0, 1) else 0)
                               for j in range(n)) for i in range(n))
    gens = [cycle, transvection]
    if q > 2:
        a = next(x for x in range(2, q)
                 if all(field.pow(x, e) != 1
                        for e in range(1, q - 1) if (q - 1) % e == 0))
        gens.append(tuple(tuple((a if i == 0 else 1) if i == j else 0
                                for j in range(n)) for i in range(n)))
    # closure check: the set generated must be all of GL_n
    all_g = gl_elements(field, n)
    seen = {_identity(n)}
    frontier = [_identity(n)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = kernels.mat_mul(m, g, field)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    if len(seen) != len(all_g):
        raise AssertionError("generator set failed to generate GL_n")
    return tuple(gens)


@dataclass(frozen=True)
class ZCensusResult:
    n: int
    q: int
    J: tuple
    total: int
    entries: tuple  # ((PieceKey, count), ...) in ShortLex order
    observed_matches: bool
    orbit_count: int | None
    orbit_sizes: tuple | None
    pieces_constant_on_orbits: bool | None

    def counts_by_key(self) -> dict:
        return dict(self.entries)

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "J": list(self.J),
            "total": self.total,
            "pieces": [{"w": str(k.w), "count": c} for k, c in self.entries],
        }
        if self.orbit_count is not None:
            out["orbit_count"] = self.orbit_count
            out["pieces_constant_on_orbits"] = self.pieces_constant_on_orbits
        return out


def z_census(n: int, q: int, J, budget: int | None = None,
             orbit_check: bool = True) -> ZCensusResult:
    """Classify every point of the pair variety by its piece.

    Verifies along the way that the observed pieces are exactly the
    combinatorial ones, and (optionally) that the classification is
    constant on conjugation orbits.
    """
    field, group, flags, u_std, reps, coset_id = \
        _census_setup(n, q, J, budget)
    eps = identity_twist(group)
    base = frozenset(J)
    keys = enumerate_pieces(group, base, eps)
    by_steps = {k.steps: i for i, k in enumerate(keys)}

    adapted = [adapted_matrix(f) for f in flags]
    flag_index = {f: i for i, f in enumerate(flags)}
    counts = [0] * len(keys)
    stray = 0
    # piece index per (flag_idx, coset rep idx), for the orbit check
    classes = {}
    for fi, flag in enumerate(flags):
        h_inv = kernels.mat_inv(adapted[fi], field)
        for ci, c in enumerate(reps):
            g = kernels.mat_mul(c, h_inv, field)
            t = z_piece(flag, g, group)
            ki = by_steps.get(t.steps)
            if ki is None:
                stray += 1
            else:
                counts[ki] += 1
            classes[(fi, ci)] = ki

    orbit_count = orbit_sizes = constant = None
    if orbit_check:
        gens = _gl_generators(field, n)
        gens_inv = [kernels.mat_inv(h, field) for h in gens]
        adapted_inv = [kernels.mat_inv(h, field) for h in adapted]
        flag_act = [[flag_index[f.transform(h)] for f in flags]
                    for h in gens]
        orbit_count = 0
        sizes = []
        constant = True
        visited = set()
        for start in classes:
            if start in visited:
                continue
            orbit_count += 1
            piece = classes[start]
            frontier = [start]
            visited.add(start)
            size = 0
            while frontier:
                nxt = []
                for (fi, ci) in frontier:
                    size += 1
                    if classes[(fi, ci)] != piece:
                        constant = False
                    g = kernels.mat_mul(reps[ci], adapted_inv[fi], field)
                    for gi, (h, h_inv) in enumerate(zip(gens, gens_inv)):
                        fi2 = flag_act[gi][fi]
                        g2 = kernels.mat_mul(
                            kernels.mat_mul(h, g, field), h_inv, field)
                        ci2 = coset_id[kernels.mat_mul(g2, adapted[fi2],
                                                       field)]
                        key = (fi2, ci2)
                        if key not in visited:
                            visited.add(key)
                            nxt.append(key)
                frontier = nxt
            sizes.append(size)
        orbit_sizes = tuple(sorted(sizes))

    total = len(flags) * len(reps)
    return ZCensusResult(
        n=n, q=q, J=tuple(sorted(base)), total=total,
        entries=tuple((k, counts[i]) for i, k in enumerate(keys)),
        observed_matches=(stray == 0 and all(c > 0 for c in counts)),
        orbit_count=orbit_count, orbit_sizes=orbit_sizes,
        pieces_constant_on_orbits=constant,
    )
