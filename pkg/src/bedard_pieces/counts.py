"""Root calculus over the pieces: fibre dimensions, piece dimensions, and
exact point-count polynomials.

Each piece is an iterated affine-space bundle whose base is classified by
the stabilized pair (J_inf, w_inf).  The per-step fibre dimension d_n and
the stabilized codimension m_t are both root counts; from them the piece
dimension is N_t + dim G - m_t and the F_q point count (split connected
case) is q^(N_t + N - m_t) (q-1)^r W(q).  The closed forms were frozen
only after matching the brute-force flag census at small q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import Element, Group, Twist, identity_twist
from .qpoly import Q, QPoly
from .sequences import PieceKey, enumerate_pieces

__all__ = [
    "NotGoodPosition",
    "PieceCensusRow",
    "CensusResult",
    "ReductiveDatum",
    "step_fibre_dim",
    "stabilized_codim",
    "piece_dim",
    "piece_count_poly",
    "variety_count_poly",
    "poincare_poly",
    "coset_poincare_poly",
    "census",
]


class NotGoodPosition(ValueError):
    """The pair (J, w) must satisfy Ad(w)J = eps(J)."""


@dataclass(frozen=True)
class ReductiveDatum:
    """A root system together with an ambient torus rank.

    The rank may exceed the semisimple rank (GL_n vs SL_n); it only enters
    counts through dim G = 2N + r and the torus factor (q-1)^r.
    """

    group: Group
    rank: int

    def __post_init__(self):
        if self.rank < self.group.rank:
            raise ValueError("torus rank below the semisimple rank")

    @property
    def dim(self) -> int:
        return 2 * self.group.rootsys.num_positive + self.rank


def _positive_outside(group: Group, J: frozenset) -> list[int]:
    rs = group.rootsys
    return [a for a in rs.positive_indices() if not rs.support[a] <= J]


def num_positive_in(group: Group, J) -> int:
    """#(positive roots supported on J)."""
    J = frozenset(J)
    rs = group.rootsys
    return sum(1 for a in rs.positive_indices() if rs.support[a] <= J)


def step_fibre_dim(Jn, eps: Twist, wn: Element) -> int:
    """Fibre dimension of the one-step bundle map on a piece:
    #( w_n (Phi+ \\ Phi_{J_n}) intersect Phi_{eps(J_n)} ).
    """
    g = wn.group
    Jn = frozenset(Jn)
    target = eps.on_subset(Jn)
    rs = g.rootsys
    word = wn.word
    count = 0
    for a in _positive_outside(g, Jn):
        if rs.support[rs.act_word(word, a)] <= target:
            count += 1
    return count


def stabilized_codim(J_inf, eps: Twist, w_inf: Element) -> int:
    """#( w_inf (Phi+ \\ Phi_{J_inf}) intersect (Phi+ \\ Phi_{eps(J_inf)}) ),
    the number of roots in the unipotent intersection of the stabilized
    parabolic pair.  Requires Ad(w_inf) J_inf = eps(J_inf).
    """
    g = w_inf.group
    J_inf = frozenset(J_inf)
    if g.ad_orbit(w_inf, J_inf) != eps.image_set(J_inf):
        raise NotGoodPosition(
            f"Ad({w_inf!r}) does not carry {sorted(J_inf)} to its twist image")
    target = eps.on_subset(J_inf)
    rs = g.rootsys
    word = w_inf.word
    count = 0
    for a in _positive_outside(g, J_inf):
        b = rs.act_word(word, a)
        if rs.positive[b] and not rs.support[b] <= target:
            count += 1
    return count


def _fibre_dims(t: PieceKey, eps: Twist) -> tuple[int, ...]:
    return tuple(step_fibre_dim(Jn, eps, wn) for Jn, wn in t.steps)


def piece_dim(t: PieceKey, eps: Twist, datum: ReductiveDatum) -> int:
    """N_t + dim G - m_t."""
    n_t = sum(_fibre_dims(t, eps))
    m_t = stabilized_codim(t.j_inf, eps, t.w_inf)
    return n_t + datum.dim - m_t


def poincare_poly(group: Group, J) -> QPoly:
    """Length generating polynomial of the standard parabolic subgroup W_J."""
    out = QPoly.zero()
    for w in group.subgroup_elements(J):
        out = out + QPoly.monomial(w.length)
    return out


def coset_poincare_poly(group: Group, J) -> QPoly:
    """Sum of q^l(w) over the minimal representatives W^J."""
    out = QPoly.zero()
    for w in group.enumerate_min_reps((), J):
        out = out + QPoly.monomial(w.length)
    return out


def piece_count_poly(t: PieceKey, eps: Twist, datum: ReductiveDatum) -> QPoly:
    """Exact |piece(F_q)| for the split connected case:
    q^(N_t + N - m_t) (q-1)^r W(q).
    """
    g = t.w.group
    n_t = sum(_fibre_dims(t, eps))
    m_t = stabilized_codim(t.j_inf, eps, t.w_inf)
    n = g.rootsys.num_positive
    return (QPoly.monomial(n_t + n - m_t) * (Q - 1) ** datum.rank
            * poincare_poly(g, range(g.rank)))


def variety_count_poly(J, datum: ReductiveDatum) -> QPoly:
    """Exact point count of the whole pair variety:
    (sum over W^J of q^l(w)) q^(N_J) (q-1)^r W(q).
    """
    g = datum.group
    return (coset_poincare_poly(g, J) * QPoly.monomial(num_positive_in(g, J))
            * (Q - 1) ** datum.rank * poincare_poly(g, range(g.rank)))


@dataclass(frozen=True)
class PieceCensusRow:
    key: PieceKey
    d_list: tuple[int, ...]
    n_t: int
    m_t: int
    dim: int
    count: QPoly

    def to_json_dict(self, q: int | None = None) -> dict:
        out = {
            "w": str(self.key.w),
            "J_inf": sorted(self.key.j_inf),
            "N_t": self.n_t,
            "m_t": self.m_t,
            "dim": self.dim,
            "count_poly": self.count.to_list(),
        }
        if q is not None:
            out["count_at_q"] = self.count(q)
        return out


@dataclass(frozen=True)
class CensusResult:
    rows: tuple[PieceCensusRow, ...]
    total: QPoly
    expected_total: QPoly
    sum_identity: bool
    dim_bound: bool
    has_dense_piece: bool

    @property
    def ok(self) -> bool:
        return self.sum_identity and self.dim_bound and self.has_dense_piece


def census(J, eps: Twist | None, datum: ReductiveDatum) -> CensusResult:
    """One row per piece, ShortLex in the classifying element, with the
    global verdicts: counts sum to the variety count, no piece dimension
    exceeds dim G, and a dense piece (dim == dim G) exists.
    """
    g = datum.group
    if eps is None:
        eps = identity_twist(g)
    rows = []
    total = QPoly.zero()
    for key in enumerate_pieces(g, J, eps):
        d_list = _fibre_dims(key, eps)
        m_t = stabilized_codim(key.j_inf, eps, key.w_inf)
        n_t = sum(d_list)
        dim = n_t + datum.dim - m_t
        poly = piece_count_poly(key, eps, datum)
        rows.append(PieceCensusRow(key, d_list, n_t, m_t, dim, poly))
        total = total + poly
    expected = variety_count_poly(J, datum)
    return CensusResult(
        rows=tuple(rows),
        total=total,
        expected_total=expected,
        sum_identity=total == expected,
        dim_bound=all(r.dim <= datum.dim for r in rows),
        has_dense_piece=any(r.dim == datum.dim for r in rows),
    )
