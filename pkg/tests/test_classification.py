from hypothesis import given
from hypothesis import strategies as st

from invseq import classification as cl
from invseq.avoidance import all_triples, count_words, parse_pattern, parse_triple, triple_to_forbidden_words


def test_labels():
    assert cl.class_label(parse_triple("(-,>,-)")) == "429A"
    assert cl.class_label(parse_triple("(>=,-,>=)")) == "429C"
    assert cl.class_label(parse_triple("(>,-,-)")) == "924"
    assert cl.class_label(parse_triple("(=,=,!=)")) == "5040"
    assert cl.label_number("2958D") == 2958


def test_class_sizes():
    eq = cl.equivalence_classes()
    assert sum(len(c.members) for c in eq) == 343
    assert len(cl.class_of(parse_triple("(=,=,!=)")).members) == 41
    assert len(cl.class_of(parse_triple("(=,<=,-)")).members) == 6


def test_class_count_is_stable_in_horizon():
    assert {len(cl.equivalence_classes(h)) for h in (6, 7, 8)} == {97}


def test_raw_word_sets_split_more():
    assert len(cl.word_set_classes()) == 154


def test_closure_examples():
    # every avoider of 000 and 001 also avoids 101 and 102
    assert cl.closure(parse_pattern("000,001")) == cl.closure(parse_pattern("000,001,101,102"))


@given(st.sampled_from(all_triples()), st.sampled_from(all_triples()))
def test_same_closure_same_counts(a, b):
    if cl.class_of(a).closure == cl.class_of(b).closure:
        wa, wb = triple_to_forbidden_words(a), triple_to_forbidden_words(b)
        assert [count_words(n, wa) for n in range(1, 8)] == [count_words(n, wb) for n in range(1, 8)]


@given(st.integers(0, (1 << 13) - 1))
def test_closure_preserves_counts(words):
    c = cl.closure(words)
    assert c & words == words
    assert cl.closure(c) == c
    assert [count_words(n, words) for n in range(1, 8)] == [count_words(n, c) for n in range(1, 8)]


def test_wilf_blocks():
    blocks = cl.wilf_classes(9)
    assert len(blocks) == 63
    assert len(cl.wilf_classes(5)) < 63
    assert sum(len(b.classes) for b in blocks) == 97


def test_ultimately_constant():
    got = {str(t): terms for t, terms in cl.ultimately_constant_report(upto=10)}
    assert sorted(got.values()) == sorted([[1, 2] + [0] * 8, [1, 2, 1] + [0] * 7, [1, 2, 2] + [1] * 7,
                                           [1, 2] + [2] * 8, [1, 2] + [2] * 8, [1, 2] + [3] * 8])


def test_tables_reproduce():
    for which in (1, 2, 3):
        report = cl.reproduce_table(which)
        assert report["passed"], report["errors"]
    notes = {n["label"] for n in cl.reproduce_table(3)["notes"]}
    assert {"214", "733"} <= notes


def test_table3_row():
    rows = {r["label"]: r for r in cl.reproduce_table(3)["rows"]}
    assert rows["4306A"]["terms"] == [1, 2, 6, 24, 118, 674, 4306, 29990, 223668]


def test_report_summary():
    report = cl.classification_report(9)
    assert report["summary"] == "97 equivalence classes, 63 Wilf classes at n=9"
    assert len(report["labels"]) == 343
