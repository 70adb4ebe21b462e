"""The stabilizing sequence calculus behind the piece partition.

Two equivalent encodings are used.  A T-sequence is a chain of generator
subsets J = J_0 >= J_1 >= ... with companion elements w_n subject to a
recurrence in the twist eps; an S-sequence carries the increments
u_n = w_{n-1}^-1 w_n together with a second subset chain J'_n.  Both
stabilize after finitely many steps, and the stabilized w classifies the
sequence: sequences with base subset J and twist eps biject with the
minimal coset representatives in ^{eps(J)}W.  Objects here always store
the minimal prefix, up to and including the first stabilized step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import Element, Group, Twist


class NotMinimalInput(ValueError):
    """The element handed to psi must have no left descent in eps(J)."""


class NotStabilized(RuntimeError):
    """A fixpoint-only operation was applied to an unstabilized sequence."""


@dataclass(frozen=True)
class SeqViolation:
    """First broken axiom of a candidate sequence."""

    axiom: str
    index: int
    message: str

    def __str__(self):
        return f"step {self.index}: {self.axiom}: {self.message}"


def _as_subsets(group: Group, sets):
    out = []
    for J in sets:
        group.subset_mask(J)  # bounds check
        out.append(frozenset(J))
    return out


def validate_t(group: Group, eps: Twist, J, steps) -> SeqViolation | None:
    """Check the T axioms on a raw list of (subset, element) steps.

    Returns None if every axiom holds, otherwise a report naming the first
    violated axiom ("chain", "subset-recurrence", "double-coset-minimality",
    "step-coset") and the step index.
    """
    if not steps:
        return SeqViolation("chain", 0, "empty sequence")
    subsets = _as_subsets(group, (s for s, _ in steps))
    words = [w for _, w in steps]
    base = frozenset(J)
    if subsets[0] != base:
        return SeqViolation("chain", 0, f"J_0 = {sorted(subsets[0])} differs "
                            f"from the base subset {sorted(base)}")
    for n in range(1, len(steps)):
        if not subsets[n] <= subsets[n - 1]:
            return SeqViolation("chain", n, "subsets must be decreasing")
    for n in range(1, len(steps)):
        orbit = group.ad_orbit(words[n - 1], subsets[n - 1])
        expect = frozenset(s for s in subsets[n - 1] if eps.images[s] in orbit)
        if subsets[n] != expect:
            return SeqViolation("subset-recurrence", n,
                                f"J_{n} should be {sorted(expect)}")
    for n, (Jn, wn) in enumerate(zip(subsets, words)):
        if not group.is_min_rep(eps.on_subset(Jn), wn, Jn):
            return SeqViolation("double-coset-minimality", n,
                                f"w_{n} = {wn!r} is not the minimal "
                                "representative of its double coset")
    for n in range(1, len(steps)):
        K = eps.on_subset(subsets[n])
        if group.min_double_coset(K, words[n], subsets[n - 1]) != \
                group.min_double_coset(K, words[n - 1], subsets[n - 1]):
            return SeqViolation("step-coset", n,
                                f"w_{n} is not in the double coset of w_{n-1}")
    return None


def validate_s(group: Group, eps: Twist, J, steps) -> SeqViolation | None:
    """Check the S axioms on raw (subset, companion subset, element) steps.

    Axiom names: "chain", "twisted-recurrence", "companion-recurrence",
    "parabolic-step", "double-coset-minimality", and the derived
    "conjugation-consistency".
    """
    if not steps:
        return SeqViolation("chain", 0, "empty sequence")
    subsets = _as_subsets(group, (s for s, _, _ in steps))
    companions = _as_subsets(group, (s for _, s, _ in steps))
    incs = [u for _, _, u in steps]
    base = frozenset(J)
    if subsets[0] != base:
        return SeqViolation("chain", 0, f"J_0 = {sorted(subsets[0])} differs "
                            f"from the base subset {sorted(base)}")
    for n in range(1, len(steps)):
        if not subsets[n] <= subsets[n - 1]:
            return SeqViolation("chain", n, "subsets must be decreasing")

    prefix = [incs[0]]
    for u in incs[1:]:
        prefix.append(group.mul(prefix[-1], u))

    for n in range(1, len(steps)):
        orbit = group.ad_orbit(prefix[n - 1], subsets[n - 1])
        lhs = eps.image_set(subsets[n])
        rhs = eps.image_set(subsets[n - 1]) & orbit
        if lhs != rhs:
            return SeqViolation("twisted-recurrence", n,
                                "eps(J_n) must cut out the conjugated subset")

    if companions[0] != eps.on_subset(base):
        return SeqViolation("companion-recurrence", 0,
                            "J'_0 must equal eps(J_0)")
    for n in range(1, len(steps)):
        x = prefix[n - 1]
        images = eps.image_set(subsets[n - 1])
        expect = frozenset(s for s in subsets[n - 1]
                           if group.conj_gen(x, s) in images)
        if companions[n] != expect:
            return SeqViolation("companion-recurrence", n,
                                f"J'_{n} should be {sorted(expect)}")

    for n in range(1, len(steps)):
        if not set(incs[n].word) <= subsets[n - 1]:
            return SeqViolation("parabolic-step", n,
                                f"u_{n} must lie in the parabolic subgroup "
                                f"of {sorted(subsets[n - 1])}")
    for n in range(len(steps)):
        if not group.is_min_rep(companions[n], incs[n], subsets[n]):
            return SeqViolation("double-coset-minimality", n,
                                f"u_{n} = {incs[n]!r} is not minimal in its "
                                "double coset")
    for n in range(1, len(steps)):
        if eps.image_set(subsets[n]) != \
                group.ad_orbit(prefix[n - 1], companions[n]):
            return SeqViolation("conjugation-consistency", n,
                                "eps(J_n) must be the conjugate of J'_n")
    return None


def _next_subset(group: Group, eps: Twist, Jn: frozenset, x: Element):
    """J_{n+1} = {s in J_n : eps(s) conjugate under x to something in J_n}."""
    orbit = group.ad_orbit(x, Jn)
    return frozenset(s for s in Jn if eps.images[s] in orbit)


@dataclass(frozen=True)
class TSeq:
    """Canonical prefix of a T-sequence, ending at the first stable step."""

    group: Group
    eps: Twist
    base: frozenset[int]
    steps: tuple[tuple[frozenset[int], Element], ...]
    stabilized: bool

    @classmethod
    def make(cls, group: Group, eps: Twist, J, steps) -> "TSeq":
        """Validate raw steps, then trim to the canonical prefix."""
        bad = validate_t(group, eps, J, steps)
        if bad is not None:
            raise ValueError(str(bad))
        clean = [(frozenset(s), w) for s, w in steps]
        kept = []
        stab = False
        for Jn, wn in clean:
            kept.append((Jn, wn))
            if _next_subset(group, eps, Jn, wn) == Jn:
                stab = True
                break
        return cls(group, eps, frozenset(J), tuple(kept), stab)

    @property
    def last(self):
        return self.steps[-1]

    def to_json_dict(self) -> dict:
        return {
            "J": sorted(self.base),
            "steps": [{"J": sorted(Jn), "w": str(wn)} for Jn, wn in self.steps],
            "stabilized": self.stabilized,
        }


@dataclass(frozen=True)
class SSeq:
    """Canonical prefix of an S-sequence; see the module docstring."""

    group: Group
    eps: Twist
    base: frozenset[int]
    steps: tuple[tuple[frozenset[int], frozenset[int], Element], ...]
    stabilized: bool

    @classmethod
    def make(cls, group: Group, eps: Twist, J, steps) -> "SSeq":
        bad = validate_s(group, eps, J, steps)
        if bad is not None:
            raise ValueError(str(bad))
        clean = [(frozenset(a), frozenset(b), u) for a, b, u in steps]
        kept = []
        x = group.identity
        stab = False
        for Jn, Jpn, un in clean:
            kept.append((Jn, Jpn, un))
            x = group.mul(x, un)
            if _next_subset(group, eps, Jn, x) == Jn:
                stab = True
                break
        return cls(group, eps, frozenset(J), tuple(kept), stab)

    def prefix_products(self) -> list[Element]:
        out = [self.steps[0][2]]
        for _, _, u in self.steps[1:]:
            out.append(self.group.mul(out[-1], u))
        return out

    def to_json_dict(self) -> dict:
        return {
            "J": sorted(self.base),
            "steps": [{"J": sorted(a), "Jp": sorted(b), "u": str(u)}
                      for a, b, u in self.steps],
            "stabilized": self.stabilized,
        }


def s_to_t(s: SSeq) -> TSeq:
    """Replace increments by their running products."""
    prods = s.prefix_products()
    steps = tuple((Jn, x) for (Jn, _, _), x in zip(s.steps, prods))
    return TSeq(s.group, s.eps, s.base, steps, s.stabilized)


def t_to_s(t: TSeq) -> SSeq:
    """Recover increments and companion subsets from a T-sequence."""
    g, eps = t.group, t.eps
    words = [w for _, w in t.steps]
    subsets = [J for J, _ in t.steps]
    out = [(subsets[0], eps.on_subset(t.base), words[0])]
    for n in range(1, len(t.steps)):
        u = g.mul(g.inv(words[n - 1]), words[n])
        images = eps.image_set(subsets[n - 1])
        Jp = frozenset(s for s in subsets[n - 1]
                       if g.conj_gen(words[n - 1], s) in images)
        out.append((subsets[n], Jp, u))
    return SSeq(g, eps, t.base, tuple(out), t.stabilized)


def phi(s: SSeq) -> Element:
    """The stabilized product u_0 u_1 ... ; defined once s has stabilized."""
    if not s.stabilized:
        raise NotStabilized("phi needs the stabilized tail of the sequence")
    return s.prefix_products()[-1]


def psi(w: Element, J, eps: Twist) -> SSeq:
    """The unique S-sequence with base J and twist eps whose stabilized
    product is w.  Requires w to be minimal in W_{eps(J)} w.

    Construction: u_0 u_1 ... u_n is at every step the minimal element of
    the double coset W_{eps(J)} w W_{J_n}, and the subset chains follow the
    defining recurrences until J_n stops shrinking.
    """
    g = w.group
    if eps.group is not g:
        raise ValueError("twist belongs to a different group")
    base = frozenset(J)
    Jp0 = eps.on_subset(base)
    if g.lmask[w.idx] & g.subset_mask(Jp0):
        raise NotMinimalInput(
            f"{w!r} has a left descent in eps(J) = {sorted(Jp0)}")

    Jn = base
    x = g.min_double_coset(Jp0, w, Jn)
    steps = [(Jn, Jp0, x)]
    prev_x = x
    for _ in range(len(base) + 2):
        Jnext = _next_subset(g, eps, Jn, prev_x)
        if Jnext == Jn:
            return SSeq(g, eps, base, tuple(steps), True)
        images = eps.image_set(Jn)
        Jp = frozenset(s for s in Jn if g.conj_gen(prev_x, s) in images)
        xn = g.min_double_coset(Jp0, w, Jnext)
        steps.append((Jnext, Jp, g.mul(g.inv(prev_x), xn)))
        Jn, prev_x = Jnext, xn
    raise RuntimeError("sequence failed to stabilize; this cannot happen "
                       "for a valid group and twist")


@dataclass(frozen=True)
class PieceKey:
    """Canonical label of one piece: the classifying element w together
    with the full stabilized sequence data."""

    w: Element
    j_inf: frozenset[int]
    w_inf: Element
    steps: tuple[tuple[frozenset[int], Element], ...]

    @classmethod
    def from_tseq(cls, t: TSeq) -> "PieceKey":
        j_inf = j_infinity(t)
        w_inf = t.steps[-1][1]
        return cls(w_inf, j_inf, w_inf, t.steps)

    def to_json_dict(self) -> dict:
        return {
            "w": str(self.w),
            "J_inf": sorted(self.j_inf),
            "steps": [{"J": sorted(J), "w": str(w)} for J, w in self.steps],
        }


def j_infinity(t: TSeq) -> frozenset[int]:
    """The stable subset of a stabilized T-sequence.

    Its conjugate under the stabilized element equals its twist image;
    this is verified and a failure raises, since it would mean the
    sequence was not actually stable.
    """
    if not t.stabilized:
        raise NotStabilized("the sequence has not reached its fixpoint")
    Jinf, w = t.steps[-1]
    g = t.group
    if g.ad_orbit(w, Jinf) != t.eps.image_set(Jinf):
        raise NotStabilized("fixpoint subset is not in good position")
    return Jinf


def enumerate_pieces(group: Group, J, eps: Twist) -> list[PieceKey]:
    """All pieces over base subset J: one per element of ^{eps(J)}W,
    in ShortLex order of the classifying element."""
    Jp = eps.on_subset(frozenset(J))
    out = []
    for w in group.enumerate_min_reps(Jp, ()):
        out.append(PieceKey.from_tseq(s_to_t(psi(w, J, eps))))
    return out
