import pytest

from symcorr.counting import (
    CensusReport,
    case_for_size,
    census_a,
    census_a_identity,
    census_d,
    cuspidal_exists,
    cuspidal_predicate,
    is_a_cuspidal_shape,
    is_d_cuspidal_shape,
    sporadic_checks,
)
from symcorr.partitions import count_p, count_p2
from symcorr.springer import cuspidal_datum


def test_census_a_examples():
    assert census_a(3).formula_count == 3
    assert census_a(0).formula_count == 1
    assert census_a(5).formula_count == 7
    assert census_a(5).formula_count == count_p(5)


def test_census_a_equals_partition_count_to_40():
    for m in range(0, 41):
        assert census_a_identity(m)
        assert census_a(m, with_enumeration=False).formula_count == count_p(m)


def test_census_d_examples():
    assert census_d(1).formula_count == 1
    assert census_d(2).formula_count == 2
    assert census_d(9).formula_count == count_p2(8) + count_p2(0)


@pytest.mark.parametrize("m", range(0, 11))
def test_census_enumeration_agrees(m):
    for report in (census_a(m, with_enumeration=True), census_d(m, with_enumeration=True)):
        assert report.enumeration_count is not None
        assert report.agree
        assert report.enumeration_count == report.formula_count


def test_enumeration_skipped_above_limit():
    report = census_a(25)
    assert report.enumeration_count is None
    assert report.agree


def test_sporadic_checks():
    d4, e6 = sporadic_checks()
    assert d4 == CensusReport("d4-triality", 4, 7, 7, True)
    assert e6 == CensusReport("e6-outer", 6, 28, 28, True)
    assert d4.enumeration_count == 1 + 6
    assert e6.enumeration_count == 1 + 2 + 25


def test_cuspidal_predicate():
    assert cuspidal_predicate("a", 6) == 1
    assert cuspidal_predicate("a", 4) == 0
    assert cuspidal_predicate("a", 3) == 1
    assert cuspidal_predicate("a", 1) == 0
    assert cuspidal_predicate("d", 9) == 1
    assert cuspidal_predicate("d", 8) == 0
    assert cuspidal_predicate("d", 25) == 1
    assert cuspidal_predicate("sporadic", 4) == 1
    with pytest.raises(ValueError):
        cuspidal_predicate("z", 3)


def test_predicate_matches_existence():
    for m in range(3, 14):
        assert cuspidal_predicate("a", m) == cuspidal_exists("a", m), m
    for m in range(4, 14):
        assert cuspidal_predicate("d", m) == cuspidal_exists("d", m), m


def test_cuspidal_shapes():
    assert is_a_cuspidal_shape((3,))
    assert is_a_cuspidal_shape((1, 5))
    assert is_a_cuspidal_shape((3, 7))
    assert not is_a_cuspidal_shape((2,))
    assert not is_a_cuspidal_shape((3, 8))
    assert not is_a_cuspidal_shape(())
    assert is_d_cuspidal_shape((2,))
    assert is_d_cuspidal_shape((2, 6, 10))
    assert not is_d_cuspidal_shape((2, 6))
    assert not is_d_cuspidal_shape((4,))


def test_cuspidal_data_have_published_shapes():
    for m in range(3, 14):
        datum = cuspidal_datum(case_for_size("a", m))
        if datum is not None:
            parts, _ = datum[0].parts, datum[1]
            assert is_a_cuspidal_shape(datum[0].parts), (m, datum)
            assert sum(datum[0].parts) == m
    for m in range(4, 14):
        datum = cuspidal_datum(case_for_size("d", m))
        if datum is not None:
            assert is_d_cuspidal_shape(datum[0].parts), (m, datum)
            assert sum(datum[0].parts) == 2 * m


def test_case_for_size():
    assert case_for_size("a", 7).family == "a-odd"
    assert case_for_size("a", 7).n == 3
    assert case_for_size("a", 8).family == "a-even"
    assert case_for_size("a", 8).n == 4
    assert case_for_size("d", 5).family == "o-outer"
    assert case_for_size("d", 5).n == 5
    with pytest.raises(ValueError):
        case_for_size("sporadic", 4)
