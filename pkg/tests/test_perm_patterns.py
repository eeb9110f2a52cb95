from functools import lru_cache

import pytest
from hypothesis import given

from invseq import perm_patterns as pp
from invseq.avoidance import PatternSyntaxError
from strategies import perms


def test_parse():
    assert pp.parse_perm_pattern("2143") == (2, 1, 4, 3)
    assert pp.parse_perm_pattern("2[41]3") == pp.SEMI_BAXTER
    assert pp.parse_perm_pattern("MMP(0,2,0,2)") == pp.MarkedMesh(0, 2, 0, 2)
    assert pp.parse_perm_pattern("plane") is pp.PLANE
    for bad in ["2243", "2[413", "MMP(1,2)", "21x"]:
        with pytest.raises(PatternSyntaxError):
            pp.parse_perm_pattern(bad)


def test_counts_at_7():
    assert pp.count_avoiders_perm(7, list(pp.BAXTER_PAIR)) == 2074
    assert pp.count_avoiders_perm(7, [pp.SEMI_BAXTER]) == 2958
    assert pp.count_avoiders_perm(7, [pp.GAPPED_1234]) == 3207
    assert pp.count_avoiders_perm(7, [pp.PLANE]) == 2958
    assert pp.count_avoiders_perm(7, [pp.BAR3BAR1542]) == 523
    assert pp.count_avoiders_perm(7, [pp.MarkedMesh(0, 2, 0, 2)]) == 3720
    assert pp.count_avoiders_perm(7, [(2, 1, 4, 3), (3, 1, 4, 2), (4, 1, 3, 2)]) == 1265
    assert pp.count_avoiders_perm(7, [(4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3)]) == 1347
    assert pp.count_avoiders_perm(7, [(4, 2, 3, 1), (4, 2, 5, 1, 3)]) == 2549
    assert pp.count_grassmannian(7) == 121


def test_classical_small():
    assert [pp.count_avoiders_perm(n, [(1, 3, 2)]) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    assert [pp.count_avoiders_perm(n, [pp.FOUR_BAR132]) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


@lru_cache(maxsize=None)
def _listed(n, pat):
    return frozenset(pp.iter_avoiders_perm(n, [pat]))


@given(perms(max_n=7))
def test_generation_matches_filter(p):
    for pat in [(2, 1, 3), pp.SEMI_BAXTER, pp.PLANE]:
        assert (p in _listed(len(p), pat)) == pp.avoids(p, pat)


@given(perms(max_n=7))
def test_classical_containment_by_subsequences(p):
    from itertools import combinations
    pat = (2, 3, 1)
    brute = any(pp.standardize([p[i] for i in idx]) == pat for idx in combinations(range(len(p)), 3))
    assert pp.contains_classical(p, pat) == brute
