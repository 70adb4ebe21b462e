"""Line partitions over extensions: the orbit-span classifier, the
Frobenius piece map, their dictionary, and the symplectic refinement."""

from collections import Counter

import pytest

from bedard_pieces.coxeter import identity_twist
from bedard_pieces.flagbrute import (
    GF,
    PartialFlag,
    SymplecticSpace,
    dl_piece,
    enumerate_lines,
    gl_line_class,
    sp_line_class,
    span,
    standard_symplectic,
    type_of_signature,
    weyl_group,
)
from bedard_pieces.sequences import enumerate_pieces, validate_t

# the GL cases exercised throughout: (n, q, extension degrees)
GL_CASES = ((2, 2, (1, 2, 3)), (3, 2, (1, 2, 3)), (3, 3, (1, 2)))

# class tallies frozen from exhaustive runs of this module's own oracle
EXPECTED_CLASSES = {
    (2, 2, 1): {1: 3},
    (2, 2, 2): {1: 3, 2: 2},
    (2, 2, 3): {1: 3, 2: 6},
    (3, 2, 1): {1: 7},
    (3, 2, 2): {1: 7, 2: 14},
    (3, 2, 3): {1: 7, 2: 42, 3: 24},
    (3, 3, 1): {1: 13},
    (3, 3, 2): {1: 13, 2: 78},
}


def test_enumerate_lines_counts():
    assert len(enumerate_lines(GF(2), 3)) == 7
    assert len(enumerate_lines(GF(3), 2)) == 4
    assert len(enumerate_lines(GF(4), 2)) == 5
    assert len(enumerate_lines(GF(8), 3)) == 73


def test_line_class_rational_is_one():
    for q, n in ((2, 2), (3, 3), (4, 2)):
        field = GF(q)
        for L in enumerate_lines(field, n):
            assert gl_line_class(L, q) == 1


def test_line_class_examples():
    f4 = GF(4)
    assert gl_line_class(span(f4, 2, [(1, 0)]), 2) == 1
    assert gl_line_class(span(f4, 2, [(1, 2)]), 2) == 2  # non-rational
    f8 = GF(8)
    classes = {gl_line_class(L, 2) for L in enumerate_lines(f8, 3)}
    assert 3 in classes  # a generic line reaches the full span


def test_line_class_tallies():
    for n, q, ms in GL_CASES:
        for m in ms:
            field = GF(q ** m)
            tally = Counter(gl_line_class(L, q)
                            for L in enumerate_lines(field, n))
            assert dict(tally) == EXPECTED_CLASSES[(n, q, m)]


def test_line_class_requires_line_and_compatible_field():
    f4 = GF(4)
    with pytest.raises(ValueError):
        gl_line_class(span(f4, 3, [(1, 0, 0), (0, 1, 0)]), 2)
    with pytest.raises(ValueError):
        gl_line_class(span(GF(9), 2, [(1, 0)]), 2)  # wrong characteristic
    with pytest.raises(ValueError):
        gl_line_class(span(GF(8), 2, [(1, 0)]), 4)  # degree 3 not even


# -- the Frobenius piece map --------------------------------------------------

def test_stable_flag_gives_constant_sequence():
    f4 = GF(4)
    flag = PartialFlag(f4, 2, (span(f4, 2, [(1, 0)]),))
    t = dl_piece(flag, 2)
    assert t.stabilized and len(t.steps) == 1
    assert t.steps[0][1].length == 0


def test_nonrational_line_first_step():
    f4 = GF(4)
    flag = PartialFlag(f4, 2, (span(f4, 2, [(1, 2)]),))
    t = dl_piece(flag, 2)
    assert str(t.steps[0][1]) == "0"


def test_dl_outputs_validate():
    for n, q, ms in GL_CASES:
        group = weyl_group(n)
        for m in ms:
            field = GF(q ** m)
            for L in enumerate_lines(field, n):
                t = dl_piece(PartialFlag(field, n, (L,)), q)
                assert t.stabilized
                assert validate_t(group, t.eps, t.base, t.steps) is None


def test_dictionary_class_equals_piece_index():
    # the orbit-span dimension j names exactly the j-th piece (ShortLex)
    for n, q, ms in GL_CASES:
        group = weyl_group(n)
        J = type_of_signature(n, (1,))
        keys = list(enumerate_pieces(group, J, identity_twist(group)))
        index_of = {k.steps: i for i, k in enumerate(keys)}
        for m in ms:
            field = GF(q ** m)
            for L in enumerate_lines(field, n):
                j = gl_line_class(L, q)
                t = dl_piece(PartialFlag(field, n, (L,)), q)
                assert index_of[t.steps] == j - 1


def test_observed_piece_count_saturates_at_top_degree():
    # at the largest tested degree the number of observed pieces hits the
    # theoretical bound, except where the degree itself caps the span
    for (n, q, m), tally in EXPECTED_CLASSES.items():
        assert set(tally) == set(range(1, min(n, m) + 1))
    assert set(EXPECTED_CLASSES[(2, 2, 3)]) == {1, 2}         # n = 2
    assert set(EXPECTED_CLASSES[(3, 2, 3)]) == {1, 2, 3}      # n = 3
    # degree 2 means the squared Frobenius fixes every line, so the span
    # never exceeds two dimensions and the top class cannot appear
    assert set(EXPECTED_CLASSES[(3, 3, 2)]) == {1, 2}


def test_full_orbit_line_lands_in_third_piece():
    f8 = GF(8)
    group = weyl_group(3)
    J = type_of_signature(3, (1,))
    keys = list(enumerate_pieces(group, J, identity_twist(group)))
    hit = False
    for L in enumerate_lines(f8, 3):
        if gl_line_class(L, 2) == 3:
            t = dl_piece(PartialFlag(f8, 3, (L,)), 2)
            assert t.steps == keys[2].steps
            hit = True
    assert hit


def test_dl_piece_multistep_structure():
    # a full-orbit line: first step drops the type to the complete flag
    f8 = GF(8)
    group = weyl_group(3)
    L = next(L for L in enumerate_lines(f8, 3) if gl_line_class(L, 2) == 3)
    t = dl_piece(PartialFlag(f8, 3, (L,)), 2)
    assert len(t.steps) == 2
    assert t.steps[0][0] == frozenset({1}) and str(t.steps[0][1]) == "0"
    assert t.steps[1][0] == frozenset()


# -- the symplectic refinement ---------------------------------------------

def test_standard_symplectic_is_validated():
    V = standard_symplectic(GF(2), 2)
    assert V.dim == 4
    e1, e3 = (1, 0, 0, 0), (0, 0, 1, 0)
    assert V.form(e1, e3) == 1
    assert V.form(e3, e1) == GF(2).neg(1)
    assert V.form(e1, e1) == 0


def test_symplectic_space_rejects_bad_forms():
    f = GF(2)
    with pytest.raises(ValueError):
        SymplecticSpace(f, 3, ((0, 1, 0), (1, 0, 0), (0, 0, 0)))
    with pytest.raises(ValueError):  # symmetric with nonzero diagonal
        SymplecticSpace(f, 2, ((1, 0), (0, 1)))
    with pytest.raises(ValueError):  # degenerate
        SymplecticSpace(f, 2, ((0, 0), (0, 0)))
    f5 = GF(5)
    with pytest.raises(ValueError):  # skew but not alternating-shaped
        SymplecticSpace(f5, 2, ((0, 2), (2, 0)))


def test_sp_rational_lines_are_first_class():
    V = standard_symplectic(GF(2), 2)
    tally = Counter(sp_line_class(L, V, 2)
                    for L in enumerate_lines(GF(2), 4))
    assert dict(tally) == {("X", 1): 15}


def test_sp_partition_at_degree_two():
    # every line gets exactly one tag; the tag set stays inside the four
    # admissible classes for half-rank two
    field = GF(4)
    V = standard_symplectic(field, 2)
    tally = Counter(sp_line_class(L, V, 2)
                    for L in enumerate_lines(field, 4))
    assert sum(tally.values()) == (4 ** 4 - 1) // 3  # all 85 lines
    assert set(tally) <= {("X", 1), ("X", 2), ("X'", 2), ("X'", 1)}
    assert dict(tally) == {("X", 1): 15, ("X", 2): 30, ("X'", 1): 40}


def test_sp_witness_examples():
    field = GF(4)
    V = standard_symplectic(field, 2)
    t = 2
    rational = span(field, 4, [(1, 0, 0, 0)])
    assert sp_line_class(rational, V, 2) == ("X", 1)
    pairing = span(field, 4, [(1, 0, t, 0)])  # meets its own translate
    assert sp_line_class(pairing, V, 2) == ("X'", 1)
    isotropic = span(field, 4, [(1, t, 0, 0)])  # span inside a Lagrangian
    assert sp_line_class(isotropic, V, 2) == ("X", 2)


def test_sp_line_must_live_in_the_space():
    V = standard_symplectic(GF(4), 2)
    with pytest.raises(ValueError):
        sp_line_class(span(GF(4), 2, [(1, 0)]), V, 2)
    with pytest.raises(ValueError):
        sp_line_class(span(GF(2), 4, [(1, 0, 0, 0)]), V, 2)
