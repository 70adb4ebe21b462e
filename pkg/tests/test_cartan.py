import pytest

from bedard_pieces.cartan import CartanType, UnknownType, cartan_matrix, \
    coxeter_matrix, root_system

# Positive root counts of the irreducible families are standard; products
# are cross-checked against the group engine elsewhere.
POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10,
    "B2": 4, "B3": 9, "B4": 16,
    "C2": 4, "C3": 9, "C4": 16,
    "D3": 6, "D4": 12,
    "G2": 6, "F4": 24, "E6": 36,
    "A1xA1": 2, "A2xA1": 4, "B2xA2": 7,
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(name, count):
    rs = root_system(name)
    assert rs.num_positive == count
    assert len(rs.roots) == 2 * count


@pytest.mark.parametrize("name", sorted(POSITIVE_COUNTS))
def test_roots_closed_and_signed(name):
    rs = root_system(name)
    seen = set(rs.roots)
    for a in rs.roots:
        assert tuple(-c for c in a) in seen
        coords = [c for c in a if c]
        assert all(c > 0 for c in coords) or all(c < 0 for c in coords)
    for i in range(rs.rank):
        perm = rs.simple_perm[i]
        assert sorted(perm) == list(range(len(rs.roots)))
        for r, img in enumerate(perm):
            assert perm[img] == r  # involution


def test_parse_products_and_names():
    ct = CartanType.parse("a2xb3")
    assert ct.name == "A2xB3"
    assert ct.rank == 5
    assert CartanType.parse("A2xA1").components == (("A", 2), ("A", 1))


@pytest.mark.parametrize("bad", ["H3", "Z2", "A0", "E9", "F5", "G3", "", "Ax"])
def test_unknown_types_rejected(bad):
    with pytest.raises(UnknownType):
        CartanType.parse(bad)


def test_coxeter_matrix_values():
    m = coxeter_matrix(CartanType.parse("B3"))
    assert m[0][1] == 3 and m[1][2] == 4 and m[0][2] == 2
    m = coxeter_matrix(CartanType.parse("G2"))
    assert m[0][1] == 6
    m = coxeter_matrix(CartanType.parse("A2xA1"))
    assert m[0][1] == 3 and m[0][2] == 2 and m[1][2] == 2


def test_cartan_matrix_b_vs_c():
    b = cartan_matrix(CartanType.parse("B2"))
    c = cartan_matrix(CartanType.parse("C2"))
    assert b[0][1] == -1 and b[1][0] == -2
    assert c[0][1] == -2 and c[1][0] == -1


def test_act_word_on_roots():
    rs = root_system("A2")
    a0 = rs.index[(1, 0)]
    a1 = rs.index[(0, 1)]
    high = rs.index[(1, 1)]
    # s1 sends the highest root a0+a1 to a0 (0-based generator 1).
    assert rs.act_word((1,), high) == a0
    assert rs.act_word((0,), a0) == rs.index[(-1, 0)]
    assert rs.act_word((0, 1), a1) == rs.index[(-1, -1)]  # s0 s1 (a1) = -(a0+a1)
    assert rs.act_word((), a1) == a1
