import pytest
from hypothesis import given

from invseq.core import (InvalidSequence, RangeViolation, check_inversion_sequence, complement, concat_back,
                         concat_front_zero, format_sequence, iter_inversion_sequences,
                         iter_inversion_sequences_partitioned, lr_maxima, parse_sequence, prefixes, reverse,
                         sigma, stats)
from strategies import inversion_sequences


def test_enumeration_small():
    assert list(iter_inversion_sequences(1)) == [(0,)]
    assert list(iter_inversion_sequences(3)) == [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert sum(1 for _ in iter_inversion_sequences(7)) == 5040


def test_partitioned_enumeration():
    assert list(iter_inversion_sequences_partitioned(2, (0,))) == [(0, 0), (0, 1)]
    assert len(list(iter_inversion_sequences_partitioned(3, (0, 1)))) == 3
    union = [e for p in prefixes(5, 2) for e in iter_inversion_sequences_partitioned(5, p)]
    assert union == list(iter_inversion_sequences(5))


def test_sigma():
    assert sigma((0, 1, 0, 2), 1) == (0, 2, 0, 3)
    assert sigma((0, 1, 1), 0) == (0, 1, 1)
    assert sigma((0, 1, 1), -1) == (0, 0, 0)


def test_concatenation():
    assert concat_back((0, 1), 2) == (0, 1, 2)
    assert concat_back((0,), 0) == (0, 0)
    with pytest.raises(RangeViolation):
        concat_back((0, 1), 3)
    assert concat_front_zero((0, 0)) == (0, 0, 0)
    assert concat_front_zero((0, 1)) == (0, 0, 1)


def test_stats_examples():
    assert tuple(stats((0,))) == (0, 1, 1, 0, 1, 0, 0)
    assert tuple(stats((0, 0, 2, 1))) == (1, 2, 3, 1, 2, 2, 1)
    assert tuple(stats((0, 1, 2, 3))) == (3, 1, 4, 0, 4, 3, 3)
    assert lr_maxima((0, 1, 1, 0, 2)) == 3


def test_validation():
    for bad in [(1,), (0, 2), (0, 0, -1)]:
        with pytest.raises(InvalidSequence):
            check_inversion_sequence(bad)
    with pytest.raises(InvalidSequence):
        parse_sequence("(0,a)")


def test_reverse_complement():
    assert reverse((0, 1, 2)) == (2, 1, 0)
    assert complement((1, 3, 2)) == (3, 1, 2)
    assert complement((1, 2, 3, 4)) == (4, 3, 2, 1)


@given(inversion_sequences())
def test_stat_identities(e):
    s = stats(e)
    n = len(e)
    assert s.dist + s.repeats == n
    assert 1 <= s.zeros <= n
    assert 0 <= s.maxx < n
    assert 1 <= s.maxim <= n
    assert s.asc <= n - 1 and s.last <= s.maxx
    assert parse_sequence(format_sequence(e)) == e
