import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcorr.errors import (
    BoundViolation,
    GapViolation,
    LengthMismatch,
    NotInClass,
    ParityMismatch,
)
from symcorr.gf2 import characters
from symcorr.partitions import count_p2, enumerate_bipartitions
from symcorr import symbols as S
from symcorr.symbols import DefectSet, Symbol, SymbolParams, parse_symbol

P41_ODD = SymbolParams(4, 1, DefectSet.ODD)
P41_EVEN = SymbolParams(4, 1, DefectSet.EVEN)
P42_ODD = SymbolParams(4, 2, DefectSet.ODD)
P40 = SymbolParams(4, 0, DefectSet.ODD_POSITIVE)


def sym(text):
    return parse_symbol(text)


def test_params_consistency():
    with pytest.raises(ValueError):
        SymbolParams(4, 0, DefectSet.EVEN)
    with pytest.raises(ValueError):
        SymbolParams(4, 1, DefectSet.ODD_POSITIVE)
    with pytest.raises(ValueError):
        SymbolParams(-1, 0, DefectSet.ODD_POSITIVE)


def test_symbol_text_round_trip():
    for text in ["(0,4;2)", "(1;)", "(;1)", "(;)"]:
        assert str(sym(text)) == text
    assert parse_symbol("(1;∅)") == Symbol((1,), ())
    with pytest.raises(ValueError):
        parse_symbol("0,4;2")


def test_validate_published_rows():
    assert S.validate(P41_ODD, sym("(0,4;2)")) == (1, 1)
    assert S.validate(P41_EVEN, sym("(1,5;1,5)")) == (2, 0)
    assert S.validate(P41_ODD, sym("(;)")) == (0, 0)


def test_validate_errors():
    with pytest.raises(GapViolation):
        S.validate(P41_ODD, sym("(0,2;)"))
    with pytest.raises(BoundViolation):
        S.validate(P42_ODD, sym("(;1)"))
    with pytest.raises(BoundViolation):
        S.validate(P41_ODD, Symbol((-1,), ()))


def test_n_min_values():
    assert S.n_min(P41_ODD, 1) == 0
    assert S.n_min(P41_ODD, -1) == 1
    assert S.n_min(P41_ODD, 3) == 7
    assert S.n_min(P42_ODD, -1) == 2
    assert S.n_min(P41_EVEN, 2) == 3
    assert S.n_min(P41_EVEN, -2) == 5
    assert S.n_min(P40, 3) == 8


def test_shift_unshift_normal_form():
    assert S.shift(P41_ODD, sym("(1;)")) == sym("(0,5;1)")
    assert S.normal_form(P41_ODD, sym("(0,5;1)")) == sym("(1;)")
    assert S.unshift(P42_ODD, sym("(1;)")) is None
    assert S.normal_form(P41_ODD, sym("(1;)")) == sym("(1;)")


def test_staircase_examples():
    assert S.staircase_to_symbol(P42_ODD, 1, ((1,), ())) == sym("(1;)")
    assert S.staircase_to_symbol(P40, 1, ((), ())) == sym("(0;)")
    assert S.staircase_from_symbol(P42_ODD, sym("(0,4;3)")) == (1, ((), (1,)))


def test_enumerate_matches_published_blocks():
    got = {str(s) for s in S.enumerate_symbols(P41_ODD, 1, 1)}
    assert got == {"(1;)", "(0,4;2)"}
    got = {str(s) for s in S.enumerate_symbols(P42_ODD, 1, 1)}
    assert got == {"(1;)", "(0,4;3)"}
    assert S.enumerate_symbols(P41_ODD, 1, 3) == []


def test_family_sizes_match_published_tables():
    # the published rank-2 even-defect table lists five symbols on four lines
    assert len(S.enumerate_family(P41_EVEN, 2)) == 5
    assert len(S.enumerate_family(P41_ODD, 2)) == 7
    assert len(S.enumerate_family(P41_ODD, 1)) == 3
    assert len(S.enumerate_family(P40, 3)) == 10
    assert [str(s) for s in S.enumerate_family(P42_ODD, 0)] == ["(0;)"]


def test_family_rejects_rho_zero():
    with pytest.raises(ValueError):
        S.enumerate_family(SymbolParams(0, 1, DefectSet.EVEN), 2)


def test_similar_examples():
    assert S.similar(P41_ODD, sym("(1;)"), sym("(;1)"))
    assert not S.similar(P41_EVEN, sym("(0;3)"), sym("(1;2)"))
    assert S.similar(P41_ODD, sym("(0,4;2)"), sym("(0,4;2)"))
    with pytest.raises(ParityMismatch):
        S.similar(P41_ODD, sym("(1;)"), sym("(1;2)"))


def test_similar_across_shift():
    a = sym("(1;)")
    assert S.similar(P41_ODD, a, S.shift(P41_ODD, S.shift(P41_ODD, a)))


@pytest.mark.parametrize("params,n", [(P41_EVEN, 3), (P41_ODD, 3), (P40, 4)])
def test_similar_is_the_class_partition(params, n):
    # pairwise similarity agrees with membership in one similarity class,
    # hence is reflexive, symmetric and transitive on the family
    classes = S.similarity_classes(params, n)
    by_member = {m: i for i, cls in enumerate(classes) for m in cls.members}
    family = S.enumerate_family(params, n)
    for x in family:
        for y in family:
            assert S.similar(params, x, y) == (by_member[x] == by_member[y])


PAPER_TABLES = {
    (4, 1, "odd", 1): [{"(1;)", "(;1)"}, {"(0,4;2)"}],
    (4, 1, "even", 2): [{"(0;3)"}, {"(1;2)", "(2;1)"}, {"(0,4;2,6)"}, {"(1,5;1,5)"}],
    (4, 1, "odd", 2): [
        {"(2;)", "(;2)"},
        {"(0,5;2)"},
        {"(1,5;1)", "(1;1,5)"},
        {"(0,4;3)"},
        {"(0,4,8;2,6)"},
    ],
    (4, 0, "odd-positive", 3): [
        {"(3;)"},
        {"(0,6;1)", "(1,6;0)"},
        {"(0,5;2)"},
        {"(1,5;1)"},
        {"(0,4;3)"},
        {"(0,4,9;1,5)", "(1,5,9;0,4)"},
        {"(0,4,8;1,6)"},
        {"(0,4,8,12;1,5,9)"},
    ],
}


@pytest.mark.parametrize("key", sorted(PAPER_TABLES, key=str))
def test_similarity_classes_against_published_tables(key):
    rho, s, defects, n = key
    params = SymbolParams(rho, s, DefectSet(defects))
    got = [
        {str(m) for m in cls.members} for cls in S.similarity_classes(params, n)
    ]
    assert got == PAPER_TABLES[key]


def test_class_vector_examples():
    cls = S.class_of(P41_EVEN, 2, sym("(1;2)"))
    assert S.class_vector(cls, sym("(1;2)")) == (0,)
    assert S.class_vector(cls, sym("(2;1)")) == (1,)
    singleton = S.class_of(P41_EVEN, 2, sym("(0;3)"))
    assert S.class_vector(singleton, sym("(0;3)")) == ()
    with pytest.raises(NotInClass):
        S.class_vector(cls, sym("(0;3)"))
    with pytest.raises(LengthMismatch):
        S.class_member(cls, (0, 1))


def test_class_member_accepts_shifted_input():
    cls = S.class_of(P41_EVEN, 2, sym("(1;2)"))
    shifted = S.shift(P41_EVEN, sym("(2;1)"))
    assert S.class_vector(cls, shifted) == (1,)


def test_s_zero_coset_behaviour():
    cls = S.class_of(P40, 3, sym("(0,6;1)"))
    assert cls.dimension == 1
    assert S.class_vector(cls, sym("(0,6;1)")) == (0, 0)
    assert S.class_vector(cls, sym("(1,6;0)")) == (0, 1)
    # both lifts of a coset name the same member
    assert S.class_member(cls, (0, 1)) == S.class_member(cls, (1, 0))
    # flipping every bit negates the defect
    for cls in S.similarity_classes(P40, 3):
        for member in cls.members:
            bits = tuple(
                1 if iv.entries[0] in set(member.row_b) else 0
                for iv in cls.intervals
                if iv.proper
            )
            flipped = S._member_from_bits(cls.intersection, cls.intervals, tuple(1 - b for b in bits))
            assert flipped.defect == -member.defect


@pytest.mark.parametrize(
    "params",
    [P40, P41_EVEN, P41_ODD, P42_ODD, SymbolParams(4, 2, DefectSet.EVEN)],
    ids=str,
)
def test_class_invariants(params):
    for n in range(0, 7):
        family = S.enumerate_family(params, n)
        classes = S.similarity_classes(params, n)
        assert sum(len(c.members) for c in classes) == len(family)
        for cls in classes:
            assert len(cls.members) == 2 ** cls.dimension
            assert len(set(cls.members)) == len(cls.members)
            for bits, member in zip(characters(cls.space), cls.members):
                assert S.class_vector(cls, member) == bits
                assert S.class_member(cls, bits) == member
            ranks = {S.validate(params, m)[0] for m in cls.members}
            assert ranks == {n}


def test_block_sizes_match_bipartition_counts():
    for params in (P40, P41_EVEN, P41_ODD, P42_ODD):
        for n in range(0, 9):
            for d in range(-7, 8):
                assert len(S.enumerate_symbols(params, n, d)) == count_p2(
                    n - S.n_min(params, d)
                )


def test_brute_force_agrees_small():
    for params in (P41_ODD, P42_ODD, P40, SymbolParams(0, 0, DefectSet.ODD_POSITIVE)):
        for n in range(0, 5):
            for d in range(-3, 4):
                fast = sorted(map(str, S.enumerate_symbols(params, n, d)))
                slow = sorted(map(str, S.brute_force_symbols(params, n, d)))
                assert fast == slow, (params, n, d)


@st.composite
def params_and_block(draw):
    rho = draw(st.sampled_from([0, 1, 2, 4]))
    s = draw(st.sampled_from([0, 1, 2]))
    if s == 0:
        params = SymbolParams(rho, s, DefectSet.ODD_POSITIVE)
    else:
        params = SymbolParams(rho, s, draw(st.sampled_from([DefectSet.EVEN, DefectSet.ODD])))
    d = draw(st.integers(-5, 5))
    weight = draw(st.integers(0, 6))
    bps = enumerate_bipartitions(weight)
    bp = bps[draw(st.integers(0, len(bps) - 1))]
    return params, d, bp


@given(params_and_block())
@settings(max_examples=200)
def test_staircase_round_trip(data):
    params, d, bp = data
    symbol = S.staircase_to_symbol(params, d, bp)
    assert S.is_normal(params, symbol)
    n, got_d = S.validate(params, symbol)
    assert got_d == d
    assert n == S.n_min(params, d) + sum(bp[0]) + sum(bp[1])
    assert S.staircase_from_symbol(params, symbol) == (d, bp)


@given(params_and_block())
@settings(max_examples=200)
def test_shift_preserves_rank_and_defect(data):
    params, d, bp = data
    symbol = S.staircase_to_symbol(params, d, bp)
    before = S.validate(params, symbol)
    shifted = S.shift(params, symbol)
    assert S.validate(params, shifted) == before
    assert S.normal_form(params, shifted) == symbol
    assert S.normal_form(params, S.normal_form(params, shifted)) == symbol
