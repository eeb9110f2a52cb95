import pytest
from hypothesis import given
from hypothesis import strategies as st

from invseq.avoidance import (ALL_WORDS, WORDS, PatternSyntaxError, Relation, all_triples, avoids_words,
                              contains_triple, count_avoiders, count_avoiders_naive, count_words,
                              iter_avoiders, mask_histogram, mask_to_words, order_type, parse_pattern,
                              parse_triple, pattern_mask, rel_holds, triple_to_forbidden_words,
                              words_to_mask)
from invseq.core import iter_inversion_sequences
from strategies import inversion_sequences, word_masks


def test_relations():
    assert rel_holds(1, 1, Relation.GE)
    assert rel_holds(0, 2, Relation.ANY)
    assert not rel_holds(2, 2, Relation.NE)
    assert len(all_triples()) == 343


def test_containment_examples():
    assert contains_triple((0, 1, 0), parse_triple("(<,>,=)"))
    assert contains_triple((0, 0, 0), parse_triple("(=,=,-)"))
    nowhere = parse_triple("(=,=,!=)")
    assert not any(contains_triple(e, nowhere) for e in iter_inversion_sequences(5))


def test_order_types():
    assert order_type(5, 5, 5) == "000"
    assert order_type(0, 2, 1) == "021"
    assert order_type(3, 0, 3) == "101"


def test_forbidden_words():
    assert mask_to_words(triple_to_forbidden_words(parse_triple("(>=,>=,>=)"))) == ["000", "100", "110", "210"]
    assert triple_to_forbidden_words(parse_triple("(-,-,-)")) == ALL_WORDS
    assert mask_to_words(triple_to_forbidden_words(parse_triple("(<,>,=)"))) == ["010"]


def test_pattern_mask():
    assert mask_to_words(pattern_mask((0, 0, 0))) == ["000"]
    assert mask_to_words(pattern_mask((0, 1, 0))) == ["010"]
    assert mask_to_words(pattern_mask((0, 0, 1, 1))) == ["001", "011"]


def test_counts_from_table():
    assert count_avoiders(7, parse_triple("(-,>,-)")) == 429
    assert count_avoiders(7, parse_triple("(=,=,-)")) == 1385
    assert count_avoiders(7, parse_triple("(>=,-,>)")) == 1806
    assert count_words(7, parse_pattern("210,100")) == 2958
    assert count_words(3, ALL_WORDS) == 0


def test_parse_errors():
    for bad in ["(x", "(<,<)", "(<,<,<,<)", "019", "01", "(<,?,-)"]:
        with pytest.raises(PatternSyntaxError):
            parse_pattern(bad)
    assert parse_pattern("(≥,≠,−)") == parse_pattern("(>=,!=,-)")
    assert parse_pattern("132") == parse_pattern("021")


def test_engine_matches_naive_scan():
    for n in range(1, 7):
        hist = mask_histogram(n)
        assert sum(hist.values()) == len(list(iter_inversion_sequences(n)))
        for t in all_triples():
            w = triple_to_forbidden_words(t)
            assert sum(c for m, c in hist.items() if not m & w) == count_avoiders_naive(n, t)


def test_histogram_matches_masks():
    from collections import Counter
    for n in range(1, 8):
        assert mask_histogram(n) == Counter(pattern_mask(e) for e in iter_inversion_sequences(n))


def test_jobs_do_not_change_counts():
    assert mask_histogram(8, jobs=1) == mask_histogram(8, jobs=3)


@given(word_masks, st.integers(1, 6))
def test_iterator_agrees_with_count(words, n):
    got = list(iter_avoiders(n, words))
    assert len(got) == count_words(n, words)
    assert all(avoids_words(e, words) for e in got)
    assert got == sorted(got)


@given(word_masks, word_masks, st.integers(1, 6))
def test_more_forbidden_means_fewer(a, b, n):
    assert count_words(n, a | b) <= min(count_words(n, a), count_words(n, b))


@given(inversion_sequences())
def test_avoidance_is_mask_disjointness(e):
    m = pattern_mask(e)
    for i, w in enumerate(WORDS):
        assert avoids_words(e, 1 << i) == (not m >> i & 1)
    assert words_to_mask(mask_to_words(m)) == m
