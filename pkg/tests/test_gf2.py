import pytest
from hypothesis import given
from hypothesis import strategies as st

from symcorr.gf2 import (
    bits_to_str,
    build_space,
    canonicalize_coset,
    characters,
    str_to_bits,
)


def test_identify_then_kill():
    space = build_space(3, identifications={(1, 2)}, kills={1})
    assert space.classes == ((0,), (1, 2))
    assert space.canonical_basis == ((0,),)
    assert space.dimension == 1


def test_zero_space():
    space = build_space(0)
    assert space.dimension == 0
    assert characters(space) == [()]


def test_quotient_of_one_class_is_zero_dimensional():
    space = build_space(2, identifications={(0, 1)}, quotient_by_all_ones=True)
    assert len(space.canonical_basis) == 1
    assert space.dimension == 0
    assert characters(space) == [(0,)]


def test_quotient_of_zero_space_is_zero_space():
    space = build_space(1, kills={0}, quotient_by_all_ones=True)
    assert space.dimension == 0
    assert characters(space) == [()]


def test_characters_lexicographic():
    space = build_space(2)
    assert characters(space) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    one = build_space(1)
    assert characters(one) == [(0,), (1,)]


def test_characters_quotient_representatives():
    space = build_space(3, quotient_by_all_ones=True)
    got = characters(space)
    assert got == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]
    reps = set(got)
    for v in reps:
        flipped = tuple(1 - b for b in v)
        assert flipped not in reps


def test_canonicalize_examples():
    assert canonicalize_coset((1, 0), True) == (0, 1)
    assert canonicalize_coset((0, 0), True) == (0, 0)
    assert canonicalize_coset((1, 0, 1), False) == (1, 0, 1)


def test_basis_order_by_least_member():
    space = build_space(5, identifications={(0, 4), (1, 3)})
    assert space.canonical_basis == ((0, 4), (1, 3), (2,))


def test_out_of_range_indices_rejected():
    with pytest.raises(ValueError):
        build_space(2, identifications={(0, 2)})
    with pytest.raises(ValueError):
        build_space(2, kills={5})


def test_bit_string_round_trip():
    assert bits_to_str((1, 0)) == "10"
    assert str_to_bits("10") == (1, 0)
    assert str_to_bits("") == ()
    with pytest.raises(ValueError):
        str_to_bits("012")


@given(st.lists(st.integers(0, 1), max_size=8).map(tuple), st.booleans())
def test_canonicalize_idempotent(bits, flag):
    once = canonicalize_coset(bits, flag)
    assert canonicalize_coset(once, flag) == once


@given(st.lists(st.integers(0, 1), min_size=1, max_size=8).map(tuple))
def test_canonicalize_constant_on_cosets(bits):
    flipped = tuple(1 - b for b in bits)
    assert canonicalize_coset(bits, True) == canonicalize_coset(flipped, True)


@given(
    st.integers(0, 6),
    st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=6),
    st.sets(st.integers(0, 5), max_size=3),
    st.booleans(),
)
def test_character_count_and_distinctness(count, idents, kills, quotient):
    idents = {(i, j) for i, j in idents if i < count and j < count}
    kills = {i for i in kills if i < count}
    space = build_space(count, idents, kills, quotient)
    chars = characters(space)
    assert len(chars) == 2 ** space.dimension
    assert len(set(chars)) == len(chars)
    if quotient:
        for v in chars:
            assert canonicalize_coset(v, True) == v
