"""Sequence calculus: hand-computed traces, axioms, and round trips."""

import pytest

from bedard_pieces import Group, flip_twist, identity_twist
from bedard_pieces.sequences import (
    NotMinimalInput,
    NotStabilized,
    PieceKey,
    SSeq,
    TSeq,
    enumerate_pieces,
    j_infinity,
    phi,
    psi,
    s_to_t,
    t_to_s,
    validate_s,
    validate_t,
)


def _steps_s(s):
    return [(sorted(a), sorted(b), str(u)) for a, b, u in s.steps]


def _steps_t(t):
    return [(sorted(a), str(w)) for a, w in t.steps]


# -- hand-computed traces ------------------------------------------------

def test_psi_identity_is_single_stable_step():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    s = psi(g.identity, [0], eps)
    assert _steps_s(s) == [([0], [0], "")]
    assert s.stabilized
    assert phi(s) == g.identity


def test_psi_trace_one_shrink():
    # w = s2 over J = {0}: the subset chain drops to empty after one step
    # and the increment there is trivial.
    g = Group.from_type("A2")
    eps = identity_twist(g)
    s = psi(g.parse("1"), [0], eps)
    assert _steps_s(s) == [([0], [0], "1"), ([], [], "")]
    assert phi(s) == g.parse("1")


def test_psi_trace_nontrivial_increment():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    s = psi(g.parse("1 0"), [0], eps)
    assert _steps_s(s) == [([0], [0], "1"), ([], [], "0")]
    t = s_to_t(s)
    assert _steps_t(t) == [([0], "1"), ([], "1 0")]
    assert phi(s) == g.parse("1 0")
    assert j_infinity(t) == frozenset()


def test_psi_flip_twist_traces():
    g = Group.from_type("A2")
    eps = flip_twist(g)
    # The twist moves the companion subset: J'_0 = eps(J_0).
    s = psi(g.identity, [0], eps)
    assert _steps_s(s) == [([0], [1], ""), ([], [], "")]
    # With w = s1 s2 the very first step is already stable: conjugation by
    # w matches the twist on J.
    s2 = psi(g.parse("0 1"), [0], eps)
    assert _steps_s(s2) == [([0], [1], "0 1")]
    assert j_infinity(s_to_t(s2)) == frozenset({0})


def test_psi_commuting_generators_trace():
    g = Group.from_type("A3")
    eps = identity_twist(g)
    s = psi(g.parse("1"), [0, 2], eps)
    assert _steps_s(s) == [([0, 2], [0, 2], "1"), ([], [], "")]


def test_full_subset_only_identity_piece():
    g = Group.from_type("B2")
    eps = identity_twist(g)
    keys = enumerate_pieces(g, [0, 1], eps)
    assert len(keys) == 1
    assert keys[0].w == g.identity
    assert keys[0].j_inf == frozenset({0, 1})


def test_piece_key_json_shape():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    key = PieceKey.from_tseq(s_to_t(psi(g.parse("1 0"), [0], eps)))
    assert key.to_json_dict() == {
        "w": "1 0",
        "J_inf": [],
        "steps": [{"J": [0], "w": "1"}, {"J": [], "w": "1 0"}],
    }
    assert key.w == key.w_inf


# -- errors ---------------------------------------------------------------

def test_psi_rejects_nonminimal_input():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    with pytest.raises(NotMinimalInput):
        psi(g.parse("0"), [0], eps)
    # With the flip twist the forbidden descents sit at eps(J).
    with pytest.raises(NotMinimalInput):
        psi(g.parse("1"), [0], flip_twist(g))


def test_phi_and_j_infinity_need_stabilization():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    s = psi(g.parse("1"), [0], eps)
    trunc = SSeq(g, eps, s.base, s.steps[:1], False)
    with pytest.raises(NotStabilized):
        phi(trunc)
    t = s_to_t(s)
    with pytest.raises(NotStabilized):
        j_infinity(TSeq(g, eps, t.base, t.steps[:1], False))


def test_validate_t_reports_first_broken_axiom():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    t = s_to_t(psi(g.parse("1 0"), [0], eps))
    steps = list(t.steps)

    bad = validate_t(g, eps, [1], steps)
    assert bad is not None and bad.axiom == "chain"

    grown = [steps[0], (frozenset({0, 1}), steps[1][1])]
    assert validate_t(g, eps, [0], grown).axiom == "chain"

    wrong_subset = [steps[0], (frozenset({0}), g.parse("1 0"))]
    assert validate_t(g, eps, [0], wrong_subset).axiom == "subset-recurrence"

    not_min = [(frozenset({0}), g.parse("1 0")), steps[1]]
    assert validate_t(g, eps, [0], not_min).axiom == "double-coset-minimality"

    off_coset = [steps[0], (frozenset(), g.parse("0"))]
    bad = validate_t(g, eps, [0], off_coset)
    assert bad.axiom in ("subset-recurrence", "step-coset")

    assert validate_t(g, eps, [0], []) is not None


def test_validate_s_reports_first_broken_axiom():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    s = psi(g.parse("1 0"), [0], eps)
    steps = list(s.steps)
    assert validate_s(g, eps, [0], steps) is None

    wrong_companion = [(steps[0][0], frozenset({1}), steps[0][2]), steps[1]]
    assert validate_s(g, eps, [0],
                      wrong_companion).axiom == "companion-recurrence"

    nonpara = [steps[0], (steps[1][0], steps[1][1], g.parse("1"))]
    assert validate_s(g, eps, [0], nonpara).axiom == "parabolic-step"

    not_min = [(steps[0][0], steps[0][1], g.parse("0 1 0")), steps[1]]
    assert validate_s(g, eps, [0], not_min).axiom == "double-coset-minimality"


def test_make_validates_and_trims():
    g = Group.from_type("A2")
    eps = identity_twist(g)
    t = s_to_t(psi(g.parse("1"), [0], eps))
    # Repeating the stable step is legal input and trims away.
    padded = list(t.steps) + [t.steps[-1], t.steps[-1]]
    assert TSeq.make(g, eps, [0], padded) == t
    with pytest.raises(ValueError):
        TSeq.make(g, eps, [0], [(frozenset({0}), g.parse("0"))])

    s = psi(g.parse("1"), [0], eps)
    spad = list(s.steps) + [(frozenset(), frozenset(), g.identity)]
    assert SSeq.make(g, eps, [0], spad) == s


# -- sweeps ---------------------------------------------------------------

def _twists(g):
    out = [identity_twist(g)]
    try:
        out.append(flip_twist(g))
    except ValueError:
        pass
    return out


def _all_subsets(rank):
    for mask in range(1 << rank):
        yield [i for i in range(rank) if mask >> i & 1]


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "A1xA1"])
def test_roundtrip_and_axioms_sweep(name):
    g = Group.from_type(name)
    for eps in _twists(g):
        for J in _all_subsets(g.rank):
            keys = enumerate_pieces(g, J, eps)
            # one piece per minimal coset representative, ShortLex order
            reps = g.enumerate_min_reps(eps.on_subset(J), ())
            assert [k.w for k in keys] == reps
            coset_count = len(g.elements()) \
                // len(g.subgroup_elements(eps.on_subset(J)))
            assert len(keys) == coset_count
            for w in reps:
                s = psi(w, J, eps)
                assert validate_s(g, eps, J, s.steps) is None
                t = s_to_t(s)
                assert validate_t(g, eps, J, t.steps) is None
                assert phi(s) == w
                assert t_to_s(t) == s
                assert s_to_t(t_to_s(t)) == t
                assert TSeq.make(g, eps, J, t.steps) == t
                assert SSeq.make(g, eps, J, s.steps) == s
                # stabilized subset is in good position for the twist
                jinf = j_infinity(t)
                assert g.ad_orbit(w, jinf) == eps.image_set(jinf)
                # increment lengths add up along every prefix
                total = 0
                for (_, _, u), x in zip(s.steps, s.prefix_products()):
                    total += u.length
                    assert x.length == total


def test_pieces_partition_count_matches_quotient_size():
    # |pieces| must equal |W| / |W_{eps(J)}| in every case above; spot-check
    # a bigger group once.
    g = Group.from_type("B3")
    eps = identity_twist(g)
    # W_{0,1} is the A2 parabolic (the order-4 bond joins 1 and 2).
    keys = enumerate_pieces(g, [0, 1], eps)
    assert len(keys) == 48 // 6
    assert len({k.w for k in keys}) == len(keys)
    keys = enumerate_pieces(g, [1, 2], eps)
    assert len(keys) == 48 // 8
    assert len({k.w for k in keys}) == len(keys)
