import pytest

from bedard_pieces.coxeter import (CapExceeded, CoxeterPresentation, Group,
                                   NotSimple, Twist, TwistNotSimpleOnSubset,
                                   diagram_automorphisms, enumerate_group,
                                   flip_twist, identity_twist)

from oracle_models import (all_subsets, dihedral_generators, fold_word,
                           mulclose, perm_inv, perm_inversions, perm_mul,
                           shortest_words, signed_generators, signed_perm_mul,
                           sym_generators)


def sym_model(n):
    gens = sym_generators(n)
    ident = tuple(range(n))
    return gens, perm_mul, ident


def signed_model(n):
    gens = signed_generators(n)
    ident = tuple(range(1, n + 1))
    return gens, signed_perm_mul, ident


def model_for(name):
    if name.startswith("A") and "x" not in name:
        return sym_model(int(name[1:]) + 1)
    if name[0] in "BC" and "x" not in name:
        return signed_model(int(name[1:]))
    if name == "G2":
        gens = dihedral_generators(6)
        return gens, perm_mul, tuple(range(6))
    raise ValueError(name)


ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48,
          "B4": 384, "C3": 48, "C4": 384, "D4": 192, "G2": 12, "F4": 1152,
          "A1xA1": 4, "A2xA1": 12}


@pytest.mark.parametrize("name,order", sorted(ORDERS.items()))
def test_group_orders(name, order):
    g = Group.from_type(name)
    assert g.order == order
    assert g.longest.length == g.rootsys.num_positive


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "G2"])
def test_enumeration_matches_concrete_model(name):
    """The word -> model-element map must be an isomorphism onto the model
    group, and canonical words must be the ShortLex-least reduced words."""
    g = Group.from_type(name)
    gens, mul, ident = model_for(name)
    assert len(gens) == g.rank

    canonical = shortest_words(gens, mul, ident, upto=10_000)
    assert len(canonical) == g.order

    images = {}
    for w in g.elements():
        img = fold_word(w.word, gens, mul, ident)
        assert canonical[img] == w.word  # ShortLex canonical form agrees
        images[w.idx] = img
    assert len(set(images.values())) == g.order

    for u in g.elements():
        for v in g.elements():
            assert images[g.mul(u, v).idx] == mul(images[u.idx], images[v.idx])


def test_lengths_and_descents_match_inversion_oracle():
    g = Group.from_type("A3")
    gens, mul, ident = sym_model(4)
    for w in g.elements():
        p = fold_word(w.word, gens, mul, ident)
        assert w.length == perm_inversions(p)
        left, right = g.descents(w)
        for i in range(g.rank):
            runs_down = perm_inversions(perm_mul(gens[i], p)) < w.length
            assert (i in left) == runs_down
            runs_down = perm_inversions(perm_mul(p, gens[i])) < w.length
            assert (i in right) == runs_down


def test_basic_arithmetic_examples():
    g = Group.from_type("A2")
    w = g.parse("0 1")
    assert str(w * w) == "1 0"  # rotation of order three
    assert (w * w * w).idx == 0
    assert g.parse("0 1 0") == g.parse("1 0 1")  # braid relation
    assert g.longest == g.parse("0 1 0")
    assert g.inv(g.parse("0 1")) == g.parse("1 0")
    assert g.parse("").length == 0
    left, right = g.descents(g.parse("0 1"))
    assert (left, right) == (frozenset({0}), frozenset({1}))


def test_element_parse_canonicalizes():
    g = Group.from_type("B2")
    assert g.element((0, 0)) == g.identity
    assert g.element((0, 1, 0, 1)) == g.element((1, 0, 1, 0))
    with pytest.raises(ValueError):
        g.element((5,))


@pytest.mark.parametrize("name", ["A2", "A3", "B2"])
def test_min_double_coset_against_enumeration(name):
    g = Group.from_type(name)
    elems = g.elements()
    for K in all_subsets(range(g.rank)):
        wk = set(g.subgroup_elements(K))
        for J in all_subsets(range(g.rank)):
            wj = set(g.subgroup_elements(J))
            for w in elems:
                coset = {g.mul(g.mul(a, w), b) for a in wk for b in wj}
                shortest = min(coset, key=lambda x: x.length)
                assert sum(1 for x in coset
                           if x.length == shortest.length) == 1
                got = g.min_double_coset(K, w, J)
                assert got == shortest
                assert g.is_min_rep(K, got, J)
                reps = g.enumerate_min_reps(K, J)
                assert got in reps


def test_min_rep_examples():
    g = Group.from_type("A2")
    # K = {s1}, J = {s2} in 1-based labels.
    reps = g.enumerate_min_reps({0}, {1})
    assert [str(w) for w in reps] == ["", "1 0"]
    assert len(g.enumerate_min_reps({}, {0})) == 3
    assert g.min_double_coset({0}, g.longest, {1}) == g.parse("1 0")


def test_subgroup_elements_order():
    g = Group.from_type("B3")
    assert len(g.subgroup_elements({0, 1})) == 6   # A2 inside B3
    assert len(g.subgroup_elements({1, 2})) == 8   # B2 inside B3
    assert len(g.subgroup_elements({})) == 1
    assert len(g.subgroup_elements({0, 1, 2})) == g.order


def test_ad_subset():
    g = Group.from_type("A2")
    w0 = g.longest
    assert g.ad_subset(w0, {0}) == frozenset({1})
    assert g.ad_subset(w0, {0, 1}) == frozenset({0, 1})
    s1 = g.parse("1")
    assert g.ad_subset(s1, {0}) == frozenset()
    with pytest.raises(NotSimple):
        g.ad_subset(s1, {0}, strict=True)
    assert g.ad_orbit(s1, {0}) == {g.parse("1 0 1")}


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        Group.from_type("A3", cap=10)


def test_enumerate_group_from_presentation():
    m = ((1, 4), (4, 1))
    g = enumerate_group(CoxeterPresentation(m))
    assert g.order == 8
    with pytest.raises(Exception):
        CoxeterPresentation(((1, 5), (5, 1)))  # non-crystallographic bond
    with pytest.raises(ValueError):
        CoxeterPresentation(((1, 3), (4, 1)))


AUTO_COUNTS = {"A1": 1, "A2": 2, "A3": 2, "A4": 2, "B2": 2, "B3": 1,
               "B4": 1, "C3": 1, "D4": 6, "G2": 2, "F4": 2,
               "A1xA1": 2, "A2xA1": 2}


@pytest.mark.parametrize("name,count", sorted(AUTO_COUNTS.items()))
def test_diagram_automorphism_counts(name, count):
    g = Group.from_type(name)
    autos = diagram_automorphisms(g)
    assert len(autos) == count
    assert autos[0].is_identity
    for eps in autos:
        assert eps.on_subset(range(g.rank)) == frozenset(range(g.rank))


def test_flip_twist_resolution():
    g = Group.from_type("A3")
    eps = flip_twist(g)
    assert eps.on_subset({0}) == frozenset({2})
    with pytest.raises(ValueError):
        flip_twist(Group.from_type("D4"))  # several candidates
    with pytest.raises(ValueError):
        flip_twist(Group.from_type("B3"))  # none


def test_twist_application_and_validation():
    g = Group.from_type("A2")
    eps = flip_twist(g)
    for w in g.elements():
        flipped = g.element(tuple(1 - i for i in w.word))
        assert eps(w) == flipped
    assert eps(g.parse("0 1")) == g.parse("1 0")
    with pytest.raises(ValueError):
        Twist(g, [g.generator(0), g.generator(0)])
    with pytest.raises(ValueError):
        Twist(g, [g.identity, g.generator(1)])
    # Conjugation by any element is a valid twist, possibly non-simple.
    inner = Twist(g, [g.conj_gen(g.parse("1"), 0), g.conj_gen(g.parse("1"), 1)])
    with pytest.raises(TwistNotSimpleOnSubset):
        inner.on_subset({0})
    assert inner.on_subset({1}) == frozenset({1})


def test_identity_twist():
    g = Group.from_type("B2")
    eps = identity_twist(g)
    assert eps.is_identity
    assert eps(g.longest) == g.longest
    assert eps.on_subset({0, 1}) == frozenset({0, 1})
