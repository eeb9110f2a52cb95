from hypothesis import given, assume

from invseq import bijections as bj
from invseq.avoidance import avoids_words, parse_pattern
from strategies import inversion_sequences


def test_alpha_beta_examples():
    assert bj.alpha((0, 1, 0, 0)) == (0, 1, 1, 0)
    assert bj.alpha((0, 1, 2, 3)) == (0, 1, 2, 3)
    assert bj.beta((0, 1, 1, 0)) == (0, 1, 0, 0)


def test_map_772_examples():
    assert bj.map_772((0, 1, 2, 0, 1)) == (0, 1, 2, 1, 0)
    assert bj.map_772((0, 1, 2, 3)) == (0, 1, 2, 3)
    assert bj.map_772((0, 1, 1)) == (0, 1, 1)
    # the weak-maxima reading leaves this out of I_n(-,<=,>=)
    assert bj.map_772_weak((0, 1, 0, 1)) == (0, 1, 0, 1)
    assert not avoids_words((0, 1, 0, 1), bj.D772_RANGE)


def test_other_maps():
    assert bj.zero_repeats((0, 1, 1, 0)) == (0, 1, 0, 0)
    assert bj.zero_repeats((0, 0, 0)) == (0, 0, 0)
    assert bj.prefix_zero((0, 1, 1, 0)) == (0, 0, 1, 0)
    tb = bj.top_bottom((0, 1, 2))
    assert tb.bottom_indices == () and tb.bottom_value == -1


def test_registry_passes():
    for name in ("theta", "invcode", "phi"):
        assert bj.verify_bijection(name, 6)["passed"]
    for name in ("alpha", "beta", "map_772", "zero_repeats", "prefix_zero"):
        for n in range(1, 8):
            assert bj.verify_bijection(name, n)["passed"], (name, n)


def test_772_preserves_statistics():
    report = bj.verify_bijection("map_772", 8)
    assert report["passed"]
    assert set(report["checks"][0]["preserved"]) == {"maxim", "maxx", "zeros", "dist", "lr_maxima"}


def test_2958D_is_a_bijection_but_misses_the_restriction():
    report = bj.verify_bijection("map_2958D", 4)
    main, restricted = report["checks"]
    assert main["passed"]
    assert not restricted["passed"]
    assert [[0, 1, 0, 1], [0, 1, 0, 1]] in restricted["counterexamples"]["outside_codomain"]


@given(inversion_sequences(max_n=9))
def test_alpha_round_trip(e):
    assume(avoids_words(e, bj.ALPHA_DOMAIN))
    f = bj.alpha(e)
    assert avoids_words(f, bj.ALPHA_RANGE)
    assert bj.beta(f) == e


@given(inversion_sequences(max_n=9))
def test_772_round_trip(e):
    assume(avoids_words(e, bj.D772_DOMAIN))
    f = bj.map_772(e)
    assert avoids_words(f, bj.D772_RANGE)
    assert bj.map_772_inverse(f) == e


@given(inversion_sequences(max_n=9))
def test_2958D_round_trip(e):
    assume(avoids_words(e, bj.D2958_DOMAIN))
    f = bj.map_2958D(e)
    assert avoids_words(f, bj.D2958_RANGE)
    assert bj.map_2958D_inverse(f) == e


@given(inversion_sequences(max_n=9))
def test_alpha_keeps_201_avoidance(e):
    assume(avoids_words(e, bj.ALPHA_DOMAIN))
    w = parse_pattern("201")
    assert avoids_words(e, w) == avoids_words(bj.alpha(e), w)
